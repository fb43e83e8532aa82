"""
配置管理工具
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field


class ComputeConfig(BaseModel):
    """计算配置"""
    h45_max_dim: int = Field(default=5, ge=0)
    max_workers: int = Field(default=1, ge=1)
    verify_constructions: bool = Field(default=True)
    closure_check_limit: int = Field(default=512, ge=1)


class EnumerationConfig(BaseModel):
    """有限域枚举预算"""
    max_field_size: int = Field(default=7, ge=2)
    max_total_dim: int = Field(default=6, ge=0)
    max_candidate_count: int = Field(default=2_000_000, ge=1)


class SamplingConfig(BaseModel):
    """随机抽样配置"""
    default_seed: int = Field(default=20240601)
    entry_bound: int = Field(default=3, ge=1)
    crosscheck_prime: int = Field(default=5, ge=2)
    crosscheck_samples: int = Field(default=500, ge=1)


class ReportConfig(BaseModel):
    """报告输出配置"""
    default_format: str = Field(default="text", pattern="^(text|json)$")
    indent: int = Field(default=2, ge=0)


class AppConfig(BaseModel):
    """应用配置"""
    compute: ComputeConfig = Field(default_factory=ComputeConfig)
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)

    debug: bool = Field(default=False)
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_file: Optional[str] = None):
        """
        初始化配置管理器

        Args:
            config_file: 配置文件路径
        """
        self.project_root = Path(__file__).parent.parent.parent.parent
        self.env_file = Path(config_file) if config_file else self.project_root / ".env"

        # 加载环境变量
        if self.env_file.exists():
            load_dotenv(self.env_file)

        self.config = self._load_config()

    def _load_config(self) -> AppConfig:
        """从环境变量加载配置"""
        config_dict = {
            "compute": {
                "h45_max_dim": int(os.getenv("H45_MAX_DIM", "5")),
                "max_workers": int(os.getenv("MAX_WORKERS", "1")),
                "verify_constructions": os.getenv("VERIFY_CONSTRUCTIONS", "true").lower() == "true",
                "closure_check_limit": int(os.getenv("CLOSURE_CHECK_LIMIT", "512")),
            },
            "enumeration": {
                "max_field_size": int(os.getenv("ENUM_MAX_FIELD_SIZE", "7")),
                "max_total_dim": int(os.getenv("ENUM_MAX_TOTAL_DIM", "6")),
                "max_candidate_count": int(os.getenv("ENUM_MAX_CANDIDATES", "2000000")),
            },
            "sampling": {
                "default_seed": int(os.getenv("DEFAULT_SEED", "20240601")),
                "entry_bound": int(os.getenv("ENTRY_BOUND", "3")),
                "crosscheck_prime": int(os.getenv("CROSSCHECK_PRIME", "5")),
                "crosscheck_samples": int(os.getenv("CROSSCHECK_SAMPLES", "500")),
            },
            "report": {
                "default_format": os.getenv("REPORT_FORMAT", "text"),
                "indent": int(os.getenv("REPORT_INDENT", "2")),
            },
            "debug": os.getenv("DEBUG", "false").lower() == "true",
            "log_level": os.getenv("LOG_LEVEL", "INFO"),
            "log_file": os.getenv("LOG_FILE") or None,
        }

        return AppConfig(**config_dict)

    def get_config(self) -> AppConfig:
        """获取配置对象"""
        return self.config

    def update_config(self, updates: Dict[str, Any]) -> None:
        """
        更新配置

        Args:
            updates: 配置更新字典，可以只包含部分字段
        """
        config_dict = self.config.model_dump()
        self._deep_update(config_dict, updates)
        self.config = AppConfig(**config_dict)

    def reset(self) -> None:
        """丢弃运行期修改，重新从环境变量加载"""
        self.config = self._load_config()

    def _deep_update(self, target: Dict[str, Any], source: Dict[str, Any]) -> None:
        """深度更新字典"""
        for key, value in source.items():
            if key in target and isinstance(target[key], dict) and isinstance(value, dict):
                self._deep_update(target[key], value)
            else:
                target[key] = value


# 创建全局配置管理器实例
config_manager = ConfigManager()


def get_config() -> AppConfig:
    """获取应用配置"""
    return config_manager.get_config()
