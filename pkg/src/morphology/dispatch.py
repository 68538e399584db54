#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
混合算法调度

窗口不超过阈值时用线性实现，否则用 van Herk/Gil-Werman。
默认阈值取自 ARM 平台上的测量：水平通道 69，垂直通道 59（两个通道访存方式不同）。
阈值只影响速度，不影响结果。

配置文件为 ASCII 文本，每行一项：
    threshold_h=<奇数>
    threshold_v=<奇数>
    source=paper|calibrated

@author: PankIns Team
@version: 3.0.0
"""

from enum import Enum
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.core.errors import ConfigFormatError
from src.core.model import check_window
from src.utils.logger_config import get_logger

from .options import Axis, PassAlgorithm

logger = get_logger(__name__)

DEFAULT_THRESHOLD_H = 69
DEFAULT_THRESHOLD_V = 59

CONFIG_KEYS = ("threshold_h", "threshold_v", "source")


class ConfigSource(str, Enum):
    DEFAULT = "paper"
    CALIBRATED = "calibrated"


class DispatchConfig(BaseModel):
    """调度阈值（不可变）"""

    model_config = ConfigDict(frozen=True)

    threshold_h: int = Field(default=DEFAULT_THRESHOLD_H, description="水平通道交叉点，w_h ≤ 阈值时用线性实现")
    threshold_v: int = Field(default=DEFAULT_THRESHOLD_V, description="垂直通道交叉点，w_v ≤ 阈值时用线性实现")
    source: ConfigSource = Field(default=ConfigSource.DEFAULT, description="阈值来源")

    @field_validator("threshold_h", "threshold_v")
    @classmethod
    def _odd_positive(cls, value: int) -> int:
        if value < 1 or value % 2 == 0:
            raise ValueError(f"阈值必须是 ≥1 的奇数: {value}")
        return value

    def threshold(self, axis: Axis) -> int:
        return self.threshold_h if axis is Axis.HORIZONTAL else self.threshold_v

    def to_text(self) -> str:
        """规范的 key=value 文本，LF 换行"""
        return (f"threshold_h={self.threshold_h}\n"
                f"threshold_v={self.threshold_v}\n"
                f"source={self.source.value}\n")

    @classmethod
    def parse(cls, text: str) -> "DispatchConfig":
        """
        解析 key=value 文本

        @param {str} text - 配置文本
        @returns {DispatchConfig} 配置
        """
        entries = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if not line.isascii():
                raise ConfigFormatError(f"第 {number} 行包含非 ASCII 字符")
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ConfigFormatError(f"第 {number} 行缺少 '=': {line}")
            if key not in CONFIG_KEYS:
                raise ConfigFormatError(f"未知的配置项: {key}")
            if key in entries:
                raise ConfigFormatError(f"配置项重复: {key}")
            entries[key] = value

        missing = [key for key in CONFIG_KEYS if key not in entries]
        if missing:
            raise ConfigFormatError(f"缺少配置项: {', '.join(missing)}")
        for key in ("threshold_h", "threshold_v"):
            if not entries[key].isdigit():
                raise ConfigFormatError(f"{key} 必须是十进制数字: {entries[key]}", details=entries)

        try:
            return cls(
                threshold_h=int(entries["threshold_h"]),
                threshold_v=int(entries["threshold_v"]),
                source=ConfigSource(entries["source"]),
            )
        except (ValueError, ValidationError) as e:
            raise ConfigFormatError(f"配置值无效: {e}", details=entries) from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> "DispatchConfig":
        raw = Path(path).read_bytes()
        try:
            text = raw.decode("ascii")
        except UnicodeDecodeError as e:
            raise ConfigFormatError(f"配置文件不是 ASCII 文本: {path}") from e
        config = cls.parse(text)
        logger.info(f"调度配置已加载: {path} -> h={config.threshold_h}, v={config.threshold_v}, {config.source.value}")
        return config

    def save(self, path: Union[str, Path]):
        Path(path).write_bytes(self.to_text().encode("ascii"))
        logger.info(f"调度配置已保存: {path}")


DEFAULT_CONFIG = DispatchConfig()


def resolve(alg: PassAlgorithm, window: int, axis: Axis,
            cfg: Optional[DispatchConfig] = None) -> PassAlgorithm:
    """
    解析通道算法

    @param {PassAlgorithm} alg - 请求的算法
    @param {int} window - 奇数窗口长度
    @param {Axis} axis - 通道方向
    @param {DispatchConfig} cfg - 阈值配置，默认阈值
    @returns {PassAlgorithm} LINEAR 或 VAN_HERK
    """
    check_window(window)
    if alg is not PassAlgorithm.AUTO:
        return alg
    cfg = cfg or DEFAULT_CONFIG
    return PassAlgorithm.LINEAR if window <= cfg.threshold(axis) else PassAlgorithm.VAN_HERK
