# 语义化版本号，在发布时手动更新
__version__ = "0.3.0"
