"""MZ Studio - 多項式環の部分空間が Mathieu-Zhao 空間か判定するツール."""

__version__ = "0.1.0"
