#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
工具模块

包含日志配置与错误码。

@author: PankIns Team
@version: 3.0.0
"""

from .error_codes import ErrorCode
from .logger_config import get_logger, get_performance_logger, setup_logging

__all__ = ['ErrorCode', 'setup_logging', 'get_logger', 'get_performance_logger']
