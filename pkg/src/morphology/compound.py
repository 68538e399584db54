#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
混合调度的腐蚀/膨胀及复合形态学运算

所有复合运算都由腐蚀、膨胀和逐像素算术组成：
开运算 = 膨胀(腐蚀)，闭运算 = 腐蚀(膨胀)，梯度 = 膨胀 - 腐蚀，
顶帽 = 原图 - 开运算，黑帽 = 闭运算 - 原图（后两者下限截断为 0）。

@author: PankIns Team
@version: 3.0.0
"""

from enum import Enum
from typing import Callable, Dict, Optional

import numpy as np

from src.core.model import PIXEL_DTYPE, BorderPolicy, Image, OpKind, StructuringElement

from .dispatch import DispatchConfig
from .options import PassAlgorithm, VerticalStrategy
from .separable import morph_separable


class MorphOp(Enum):
    """命令行可用的运算"""

    ERODE = "erode"
    DILATE = "dilate"
    OPEN = "open"
    CLOSE = "close"
    GRADIENT = "gradient"
    TOPHAT = "tophat"
    BLACKHAT = "blackhat"


def _auto(src: Image, se: StructuringElement, op: OpKind, border: BorderPolicy,
          cfg: Optional[DispatchConfig]) -> Image:
    return morph_separable(src, se, op, border, PassAlgorithm.AUTO, PassAlgorithm.AUTO,
                           VerticalStrategy.DIRECT, cfg)


def erode(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
          cfg: Optional[DispatchConfig] = None) -> Image:
    """混合调度腐蚀"""
    return _auto(src, se, OpKind.ERODE, border, cfg)


def dilate(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
           cfg: Optional[DispatchConfig] = None) -> Image:
    """混合调度膨胀"""
    return _auto(src, se, OpKind.DILATE, border, cfg)


def opening(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
            cfg: Optional[DispatchConfig] = None) -> Image:
    return dilate(erode(src, se, border, cfg), se, border, cfg)


def closing(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
            cfg: Optional[DispatchConfig] = None) -> Image:
    return erode(dilate(src, se, border, cfg), se, border, cfg)


def _saturating_difference(minuend: Image, subtrahend: Image) -> Image:
    diff = minuend.pixels.astype(np.int16) - subtrahend.pixels.astype(np.int16)
    return Image.from_array(np.clip(diff, 0, 255).astype(PIXEL_DTYPE))


def gradient(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
             cfg: Optional[DispatchConfig] = None) -> Image:
    """
    形态学梯度 = 膨胀 - 腐蚀

    两者取自同一窗口样本集合，膨胀 ≥ 腐蚀 处处成立，不会下溢。
    """
    return _saturating_difference(dilate(src, se, border, cfg), erode(src, se, border, cfg))


def top_hat(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
            cfg: Optional[DispatchConfig] = None) -> Image:
    """白顶帽 = 原图 - 开运算"""
    return _saturating_difference(src, opening(src, se, border, cfg))


def black_hat(src: Image, se: StructuringElement, border: BorderPolicy = BorderPolicy(),
              cfg: Optional[DispatchConfig] = None) -> Image:
    """黑顶帽 = 闭运算 - 原图"""
    return _saturating_difference(closing(src, se, border, cfg), src)


OPERATIONS: Dict[MorphOp, Callable[..., Image]] = {
    MorphOp.ERODE: erode,
    MorphOp.DILATE: dilate,
    MorphOp.OPEN: opening,
    MorphOp.CLOSE: closing,
    MorphOp.GRADIENT: gradient,
    MorphOp.TOPHAT: top_hat,
    MorphOp.BLACKHAT: black_hat,
}


def apply_operation(op: MorphOp, src: Image, se: StructuringElement,
                    border: BorderPolicy = BorderPolicy(),
                    cfg: Optional[DispatchConfig] = None) -> Image:
    """按名称执行运算"""
    return OPERATIONS[op](src, se, border, cfg)
