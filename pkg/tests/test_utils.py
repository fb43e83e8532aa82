"""
配置与日志工具测试
"""

import os

import pytest
from pydantic import ValidationError

from lyat.utils.config import ConfigManager, config_manager, get_config
from lyat.utils.logger import get_logger, setup_from_config, setup_logger


class TestConfig:

    def test_defaults(self):
        cfg = get_config()
        assert cfg.enumeration.max_field_size == 7
        assert cfg.compute.closure_check_limit == 512
        assert cfg.sampling.default_seed == 20240601

    def test_update_is_deep_merge(self):
        config_manager.update_config({"compute": {"h45_max_dim": 2}})
        cfg = get_config()
        assert cfg.compute.h45_max_dim == 2
        assert cfg.compute.closure_check_limit == 512

    def test_update_is_validated(self):
        with pytest.raises(ValidationError):
            config_manager.update_config({"report": {"default_format": "yaml"}})

    def test_reset_discards_overrides(self):
        config_manager.update_config({"enumeration": {"max_total_dim": 1}})
        config_manager.reset()
        assert get_config().enumeration.max_total_dim == 6

    def test_env_file(self, tmp_path, monkeypatch):
        monkeypatch.delenv("ENUM_MAX_FIELD_SIZE", raising=False)
        env = tmp_path / ".env"
        env.write_text("ENUM_MAX_FIELD_SIZE=5\n", encoding="utf-8")
        try:
            manager = ConfigManager(str(env))
            assert manager.get_config().enumeration.max_field_size == 5
        finally:
            os.environ.pop("ENUM_MAX_FIELD_SIZE", None)


class TestLogger:

    def test_console_goes_to_stderr(self, capsys):
        setup_logger(log_level="DEBUG")
        get_logger("tests").debug("写入 stderr")
        captured = capsys.readouterr()
        assert "写入 stderr" in captured.err
        assert "写入 stderr" not in captured.out
        setup_logger()

    def test_debug_forces_level(self, capsys):
        config_manager.update_config({"debug": True, "log_level": "ERROR"})
        setup_from_config(get_config())
        get_logger("tests").debug("调试信息")
        assert "调试信息" in capsys.readouterr().err
        setup_logger()
