#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
通道算法选项

@author: PankIns Team
@version: 3.0.0
"""

from enum import Enum


class PassAlgorithm(Enum):
    """
    一维通道算法；AUTO 在执行前按调度阈值解析为 LINEAR 或 VAN_HERK

    VAN_HERK_SCALAR 是逐元素循环的 van Herk，只作为基准对照，调度不会选中它。
    """

    LINEAR = "linear"
    VAN_HERK = "vanherk"
    VAN_HERK_SCALAR = "vanherk_scalar"
    AUTO = "auto"


class VerticalStrategy(Enum):
    """垂直通道实现方式：直接按整行处理，或转置后当作水平通道"""

    DIRECT = "direct"
    VIA_TRANSPOSE = "transpose"


class Axis(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
