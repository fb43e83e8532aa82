"""
lyat - Lie-Yamaguti 代数精确计算工具
上同调、阿贝尔扩张与自同构可诱导性判定
"""

__version__ = "0.1.0"
