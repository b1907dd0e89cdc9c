"""アプリケーション層 - ユースケースとインターフェース."""
