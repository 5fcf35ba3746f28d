"""命令行、配置、输出模型与验证套件。"""
