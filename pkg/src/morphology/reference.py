#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
二维形态学暴力实现

按定义对每个输出像素取结构元素窗口内的最小值（腐蚀）或最大值（膨胀），
每个抽头都经过 core.model 的边界取样。复杂度 O(宽·高·w_h·w_v)，作为所有快速路径的对照。

@author: PankIns Team
@version: 3.0.0
"""

import numpy as np

from src.core.model import BorderPolicy, Image, OpKind, StructuringElement, sample_grid
from src.utils.logger_config import get_logger

logger = get_logger(__name__)


def morph_reference(src: Image, se: StructuringElement, op: OpKind,
                    border: BorderPolicy = BorderPolicy()) -> Image:
    """
    暴力腐蚀/膨胀

    @param {Image} src - 源图像
    @param {StructuringElement} se - 结构元素
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @returns {Image} 新图像
    """
    logger.debug("暴力%s: %dx%d, se=%s, border=%s", op.value, src.width, src.height, se, border)

    ys = np.arange(src.height)[:, np.newaxis]
    xs = np.arange(src.width)[np.newaxis, :]
    out = None
    # 逐个抽头整幅取样，抽头内部不做任何合并或复用
    for dy in range(-se.wing_v, se.wing_v + 1):
        for dx in range(-se.wing_h, se.wing_h + 1):
            tap = sample_grid(src, xs + dx, ys + dy, border)
            out = tap.copy() if out is None else op.reduce(out, tap)
    return Image.from_array(out)
