"""インフラストラクチャ層 - 計算エンジン・入出力の実装."""
