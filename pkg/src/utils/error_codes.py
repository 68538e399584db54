#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
错误代码定义模块
定义系统中使用的各种错误代码
"""

from enum import IntEnum


class ErrorCode(IntEnum):
    """错误代码枚举"""

    # 通用错误 (1000-1999)
    INVALID_PARAMETER = 1000
    INVALID_IMAGE = 1001

    # 几何错误 (2000-2099)
    EVEN_EXTENT = 2000
    ZERO_EXTENT = 2001

    # 转置分块错误 (3000-3099)
    UNSUPPORTED_TILE = 3000

    # PGM 解析错误 (4000-4099)
    BAD_MAGIC = 4000
    BAD_HEADER = 4001
    UNSUPPORTED_MAXVAL = 4002
    TRUNCATED_DATA = 4003
    BAD_PIXEL_DATA = 4004

    # 配置与调度错误 (5000-5099)
    CONFIG_ERROR = 5000
    INSUFFICIENT_REPS = 5001
    SETTINGS_ERROR = 5002

    # 命令行与基准测试错误 (6000-6099)
    BAD_RANGE = 6000
    USAGE_ERROR = 6001
    IO_ERROR = 6002
