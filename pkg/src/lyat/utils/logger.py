"""
日志工具
控制台日志一律写 stderr，stdout 只留给报告与数据文件
"""

import os
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Optional

from loguru import logger

if TYPE_CHECKING:
    from .config import AppConfig

DEFAULT_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
    "<level>{message}</level>"
)


def get_logger(name: str) -> "logger":
    """
    获取日志记录器

    Args:
        name: 模块名，写入 extra[name]

    Returns:
        logger: 绑定了模块名的日志记录器
    """
    return logger.bind(name=name)


def setup_logger(
    log_file: Optional[str] = None,
    log_level: str = "INFO",
    log_format: Optional[str] = None,
    colorize: Optional[bool] = None,
    diagnose: bool = False,
) -> None:
    """
    设置日志配置

    Args:
        log_file: 日志文件路径，None 时只输出到 stderr
        log_level: 日志级别
        log_format: 日志格式，缺省为 DEFAULT_FORMAT
        colorize: 是否着色，缺省在 stderr 为终端时着色
        diagnose: 异常时输出变量值，调试模式使用
    """
    logger.remove()
    logger.configure(extra={"name": "lyat"})
    log_format = log_format or DEFAULT_FORMAT
    if colorize is None:
        colorize = sys.stderr.isatty()

    logger.add(sys.stderr, format=log_format, level=log_level, colorize=colorize, diagnose=diagnose)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_file,
            format=log_format,
            level=log_level,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
            diagnose=diagnose,
        )


def setup_from_config(cfg: "AppConfig") -> None:
    """按配置重建日志；debug 打开时强制 DEBUG 级别"""
    level = "DEBUG" if cfg.debug else cfg.log_level
    setup_logger(log_file=cfg.log_file, log_level=level, diagnose=cfg.debug)


# 导入时的默认配置，CLI 解析参数后会再调用 setup_from_config
setup_logger(log_file=os.getenv("LOG_FILE") or None, log_level=os.getenv("LOG_LEVEL", "INFO"))
