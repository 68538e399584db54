#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
形态学库异常定义

所有异常都继承自 MorphologyError，携带错误码、错误信息和可选详情。
"""

from typing import Any

from src.utils.error_codes import ErrorCode


class MorphologyError(Exception):
    """
    形态学模块基础异常类

    Attributes:
        code (ErrorCode): 错误码
        message (str): 错误信息
        details (Any): 错误详情 (可选)
    """
    def __init__(self, code: ErrorCode, message: str, details: Any = None):
        self.code = code
        self.message = message
        self.details = details
        super().__init__(f"[{code.name}] {message}")


class InvalidParameterError(MorphologyError):
    """参数无效"""
    def __init__(self, message: str = "参数无效", details: Any = None):
        super().__init__(ErrorCode.INVALID_PARAMETER, message, details)


class InvalidImageError(MorphologyError):
    """图像尺寸、步长或缓冲区不满足约束"""
    def __init__(self, message: str = "图像无效", details: Any = None):
        super().__init__(ErrorCode.INVALID_IMAGE, message, details)


class EvenExtentError(MorphologyError):
    """结构元素尺寸为偶数（只支持奇数尺寸、中心锚点）"""
    def __init__(self, extent: int, message: str = "结构元素尺寸必须为奇数", details: Any = None):
        super().__init__(ErrorCode.EVEN_EXTENT, f"{message}: {extent}", details)
        self.extent = extent


class ZeroExtentError(MorphologyError):
    """结构元素尺寸为 0 或负数"""
    def __init__(self, extent: int, message: str = "结构元素尺寸必须 ≥1", details: Any = None):
        super().__init__(ErrorCode.ZERO_EXTENT, f"{message}: {extent}", details)
        self.extent = extent


class UnsupportedTileError(MorphologyError):
    """不支持的转置分块规格"""
    def __init__(self, n: int, elem_bits: int, message: str = "不支持的分块规格", details: Any = None):
        super().__init__(ErrorCode.UNSUPPORTED_TILE, f"{message}: {n}x{n}.{elem_bits}", details)
        self.n = n
        self.elem_bits = elem_bits


class BadMagicError(MorphologyError):
    """PGM 魔数错误"""
    def __init__(self, message: str = "不是 P5/P2 格式的 PGM 文件", details: Any = None):
        super().__init__(ErrorCode.BAD_MAGIC, message, details)


class BadHeaderError(MorphologyError):
    """PGM 文件头错误"""
    def __init__(self, message: str = "PGM 文件头无效", details: Any = None):
        super().__init__(ErrorCode.BAD_HEADER, message, details)


class UnsupportedMaxvalError(MorphologyError):
    """PGM maxval 不是 255"""
    def __init__(self, maxval: int, message: str = "只支持 maxval=255", details: Any = None):
        super().__init__(ErrorCode.UNSUPPORTED_MAXVAL, f"{message}，实际为 {maxval}", details)
        self.maxval = maxval


class TruncatedDataError(MorphologyError):
    """PGM 像素数据不足"""
    def __init__(self, expected: int, actual: int, message: str = "PGM 像素数据被截断", details: Any = None):
        super().__init__(ErrorCode.TRUNCATED_DATA, f"{message}: 需要 {expected} 个像素，实际 {actual} 个", details)
        self.expected = expected
        self.actual = actual


class BadPixelDataError(MorphologyError):
    """P2 像素值无法解析或超出 0..255"""
    def __init__(self, message: str = "PGM 像素值无效", details: Any = None):
        super().__init__(ErrorCode.BAD_PIXEL_DATA, message, details)


class ConfigFormatError(MorphologyError):
    """调度配置文件格式错误"""
    def __init__(self, message: str = "调度配置文件格式错误", details: Any = None):
        super().__init__(ErrorCode.CONFIG_ERROR, message, details)


class InsufficientRepsError(MorphologyError):
    """计时重复次数不足"""
    def __init__(self, reps: int, minimum: int = 3, details: Any = None):
        super().__init__(ErrorCode.INSUFFICIENT_REPS, f"重复次数至少为 {minimum}，实际为 {reps}", details)
        self.reps = reps


class BadRangeError(MorphologyError):
    """窗口范围无效"""
    def __init__(self, message: str = "窗口范围无效", details: Any = None):
        super().__init__(ErrorCode.BAD_RANGE, message, details)


class UsageError(MorphologyError):
    """命令行参数错误"""
    def __init__(self, message: str = "命令行参数错误", details: Any = None):
        super().__init__(ErrorCode.USAGE_ERROR, message, details)


class SettingsFormatError(MorphologyError):
    """JSON 设置文件无效"""
    def __init__(self, path: str, reason: str, details: Any = None):
        super().__init__(ErrorCode.SETTINGS_ERROR, f"设置文件无效: {path}: {reason}", details)
        self.path = path
