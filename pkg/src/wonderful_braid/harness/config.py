"""运行配置 ── 默认值、设置文件与全局单例。

配置优先级（从高到低）：
    命令行参数 > ``--config`` 指定的设置文件 > 默认值

设置文件是 ``KEY=VALUE`` 文本，键以 ``WONDERFUL_BRAID_`` 为前缀，例如::

    # 枚举与验证的规模
    WONDERFUL_BRAID_TRUNCATION_ORDER=12
    WONDERFUL_BRAID_VERIFY_N_MAX=6
    WONDERFUL_BRAID_WORKERS=4

不读取进程环境变量：同一组参数在任何环境下都给出同样的输出。
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from wonderful_braid.errors import DomainError

PREFIX = "WONDERFUL_BRAID_"

_TRUE = ("1", "true", "yes")


def _read_settings_file(path: Path) -> dict[str, str]:
    """读取设置文件中的键值对（去掉前缀并转为小写字段名）。

    Args:
        path: 设置文件路径。

    Returns:
        ``{字段名: 原始字符串值}``；未带前缀的键被忽略。
    """
    if not path.is_file():
        raise DomainError(f"settings file {path} does not exist")
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            # 跳过空行和注释行
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip().strip("'\"")
            if key.startswith(PREFIX):
                values[key[len(PREFIX):].lower()] = val
    return values


@dataclass
class Settings:
    """全部可配置项。

    配置项分为以下几组：
    - 级数（truncation_order）
    - 枚举上限（enumeration_bound / tree_bound）
    - 验证（verify_n_max / verify_order / workers）
    - 闭包（allow_trivial_meet）
    - 日志（log_level）
    """

    # ---- 级数 ----
    truncation_order: int = 12      # 生成函数默认截断阶

    # ---- 枚举上限 ----
    enumeration_bound: int = 8      # 穷举型对照接受的最大 n
    tree_bound: int = 8             # 有根树求和的最大截断阶

    # ---- 验证 ----
    verify_n_max: int = 6           # verify 默认的 n 上限
    verify_order: int = 8           # verify 默认的级数截断阶
    workers: int = 1                # 并行检查的进程数

    # ---- 闭包 ----
    allow_trivial_meet: bool = False  # 并规则是否也作用于交为 {V} 的对子

    # ---- 日志 ----
    log_level: str = "info"

    @classmethod
    def from_file(cls, path: Path | str | None = None) -> "Settings":
        """从设置文件创建 Settings；``path`` 为 None 时返回默认配置。"""
        if path is None:
            return cls()
        raw = _read_settings_file(Path(path))
        kwargs: dict[str, object] = {}
        for f in fields(cls):
            if f.name not in raw:
                continue
            text = raw[f.name]
            try:
                if f.type in ("bool", bool):
                    kwargs[f.name] = text.lower() in _TRUE
                elif f.type in ("int", int):
                    kwargs[f.name] = int(text)
                else:
                    kwargs[f.name] = text
            except ValueError as exc:
                raise DomainError(f"invalid value {text!r} for {PREFIX}{f.name.upper()}") from exc
        return cls(**kwargs)


# 模块级全局配置单例，首次调用 get_settings() 时创建
_settings: Settings | None = None


def get_settings() -> Settings:
    """获取全局配置单例（尚未初始化时使用默认值）。"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings(settings: Settings | None = None) -> None:
    """替换全局配置单例；传 None 则清空，下次 get_settings 时重新创建。"""
    global _settings
    _settings = settings
