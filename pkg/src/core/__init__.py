#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
核心模块

图像、结构元素、边界策略等共享数据模型与异常定义。

@author: PankIns Team
@version: 3.0.0
"""

from .errors import MorphologyError
from .model import BorderKind, BorderPolicy, Image, OpKind, StructuringElement, make_se, sample

__all__ = ['MorphologyError', 'BorderKind', 'BorderPolicy', 'Image', 'OpKind',
           'StructuringElement', 'make_se', 'sample']
