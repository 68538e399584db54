#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
应用设置模块

提供命令行工具的配置管理功能，包括日志参数、基准测试默认参数等。

@author: PankIns Team
@version: 3.0.0
"""

import copy
import json
from pathlib import Path
from typing import Any, Dict, Optional

from src.core.errors import SettingsFormatError
from src.utils.logger_config import get_logger


class Settings:
    """
    应用设置管理器

    未指定配置文件时只使用默认值；指定了文件则必须存在且是 JSON 对象。
    """

    def __init__(self, config_file: Optional[str] = None):
        """
        初始化设置管理器

        Args:
            config_file: JSON 配置文件路径，为 None 时只使用默认配置

        Raises:
            FileNotFoundError: 指定的文件不存在
            SettingsFormatError: 文件不是合法的 JSON 对象
        """
        self.logger = get_logger(__name__)
        self.config_file = Path(config_file) if config_file else None

        # 默认配置
        self._default_config = {
            "logging": {
                "level": "INFO",
                "console_level": "WARNING",
                "file_level": "DEBUG",
                "log_dir": None
            },
            "bench": {
                "width": 800,
                "height": 600,
                "reps": 21,
                "seed": 20160512,
                "windows": "3..127"
            },
            "dispatch": {
                "config_file": None
            }
        }

        self.config: Dict[str, Any] = {}
        self.load_config()

    def load_config(self):
        """加载配置文件，与默认配置合并"""
        self.config = copy.deepcopy(self._default_config)
        if self.config_file is None:
            return

        with open(self.config_file, 'r', encoding='utf-8') as f:
            try:
                loaded_config = json.load(f)
            except ValueError as e:
                raise SettingsFormatError(str(self.config_file), str(e)) from e
        if not isinstance(loaded_config, dict):
            raise SettingsFormatError(str(self.config_file), "顶层必须是 JSON 对象")

        self.config = self._merge_configs(self._default_config, loaded_config)
        self.logger.info(f"配置文件加载成功: {self.config_file}")

    def get(self, key_path: str, default=None):
        """
        获取配置值

        Args:
            key_path: 配置路径，使用.分隔，如 "bench.width"
            default: 默认值

        Returns:
            配置值
        """
        value = self.config
        try:
            for key in key_path.split('.'):
                value = value[key]
            return value
        except (KeyError, TypeError):
            return default

    def _merge_configs(self, default: Dict, loaded: Dict) -> Dict:
        """
        合并配置字典

        Args:
            default: 默认配置
            loaded: 加载的配置

        Returns:
            合并后的配置
        """
        result = copy.deepcopy(default)
        for key, value in loaded.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value
        return result

    # 便捷方法
    @property
    def log_level(self) -> str:
        """根日志级别"""
        return self.get("logging.level", "INFO")

    @property
    def console_level(self) -> str:
        """控制台日志级别"""
        return self.get("logging.console_level", "WARNING")

    @property
    def file_level(self) -> str:
        """日志文件级别"""
        return self.get("logging.file_level", "DEBUG")

    @property
    def log_dir(self) -> Optional[str]:
        """日志目录，None 表示不写日志文件"""
        return self.get("logging.log_dir")

    @property
    def bench_size(self) -> tuple:
        """基准测试图像尺寸 (宽, 高)"""
        return (self.get("bench.width", 800), self.get("bench.height", 600))

    @property
    def bench_reps(self) -> int:
        """基准测试重复次数"""
        return self.get("bench.reps", 21)

    @property
    def bench_seed(self) -> int:
        """基准测试随机种子"""
        return self.get("bench.seed", 20160512)

    @property
    def bench_windows(self) -> str:
        """基准测试窗口范围"""
        return self.get("bench.windows", "3..127")

    @property
    def dispatch_config_file(self) -> Optional[str]:
        """调度阈值配置文件"""
        return self.get("dispatch.config_file")
