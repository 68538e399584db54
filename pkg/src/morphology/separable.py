#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
可分离腐蚀/膨胀

平坦矩形结构元素的极值滤波等于一次垂直通道与一次水平通道的组合。
默认先做垂直通道，再做水平通道；两种顺序结果相同。

垂直通道有两种实现：
- DIRECT：按整行逐元素运算。线性算法每次产出相邻两行 y、y+1，
  两个窗口共享的 w_v-1 行只合并一次，再各自补上一行；
  van Herk 直接沿列方向分块。
- VIA_TRANSPOSE：转置后当作水平通道处理，再转置回来。

@author: PankIns Team
@version: 3.0.0
"""

from typing import Callable, Dict, Optional

import numpy as np

from src.core.model import PIXEL_DTYPE, BorderPolicy, Image, OpKind, StructuringElement, check_window, pad_along
from src.utils.logger_config import get_logger

from .dispatch import DispatchConfig, resolve
from .options import Axis, PassAlgorithm, VerticalStrategy
from .reference import morph_reference
from .sliding_extrema import linear_window_rows, van_herk_rows, van_herk_scalar_rows
from .transpose import transpose_image

logger = get_logger(__name__)

RowKernel = Callable[..., np.ndarray]

_ROW_KERNELS: Dict[PassAlgorithm, RowKernel] = {
    PassAlgorithm.LINEAR: linear_window_rows,
    PassAlgorithm.VAN_HERK: van_herk_rows,
    PassAlgorithm.VAN_HERK_SCALAR: van_herk_scalar_rows,
}


def _run_rows(pixels: np.ndarray, w: int, op: OpKind, border: BorderPolicy,
              alg: PassAlgorithm) -> np.ndarray:
    return _ROW_KERNELS[alg](pixels, w, op, border)


def horizontal_pass(src: Image, w_h: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                    alg: PassAlgorithm = PassAlgorithm.AUTO,
                    config: Optional[DispatchConfig] = None) -> Image:
    """
    水平通道：每一行独立做窗口为 w_h 的一维极值

    @param {Image} src - 源图像
    @param {int} w_h - 奇数窗口长度
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @param {PassAlgorithm} alg - 一维算法，AUTO 按 config 的水平阈值解析
    @param {DispatchConfig} config - 调度配置
    @returns {Image} 新图像
    """
    alg = resolve(alg, w_h, Axis.HORIZONTAL, config)
    return Image.from_array(_run_rows(src.pixels, w_h, op, border, alg))


def _vertical_pairs(padded: np.ndarray, height: int, w: int, op: OpKind) -> np.ndarray:
    """
    两行共享的线性垂直通道

    padded 为上下各扩展 wing 行后的 (height + w - 1, stride) 数组，
    输出行 y 覆盖 padded[y .. y+w-1]。
    """
    out = np.empty((height, padded.shape[1]), dtype=PIXEL_DTYPE)
    pairs = height // 2
    if pairs:
        span = 2 * pairs
        # 行 y 与 y+1 共享 padded[y+1 .. y+w-1]
        shared = padded[1:1 + span:2].copy()
        for k in range(2, w):
            op.reduce(shared, padded[k:k + span:2], out=shared)
        op.reduce(shared, padded[0:span:2], out=out[0:span:2])
        op.reduce(shared, padded[w:w + span:2], out=out[1:span:2])
    if height % 2:
        y = height - 1
        out[y] = op.reduce.reduce(padded[y:y + w], axis=0)
    return out


def vertical_pass_direct(src: Image, w_v: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                         alg: PassAlgorithm = PassAlgorithm.LINEAR,
                         config: Optional[DispatchConfig] = None) -> Image:
    """
    垂直通道，直接在整行（含填充列）上运算

    @param {Image} src - 源图像
    @param {int} w_v - 奇数窗口长度
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @param {PassAlgorithm} alg - LINEAR 为两行共享算法，VAN_HERK（及逐元素版本）沿列分块
    @param {DispatchConfig} config - 调度配置（alg 为 AUTO 时使用垂直阈值）
    @returns {Image} 新图像，保留源图像的步长
    """
    wing = check_window(w_v)
    alg = resolve(alg, w_v, Axis.VERTICAL, config)
    if wing == 0:
        return Image.from_padded(src.padded.copy(), src.width)

    if alg is PassAlgorithm.LINEAR:
        padded = pad_along(src.padded, wing, 0, border)
        out = _vertical_pairs(padded, src.height, w_v, op)
    else:
        out = _run_rows(src.padded.T, w_v, op, border, alg).T
    return Image.from_padded(out, src.width)


def vertical_pass_via_transpose(src: Image, w_v: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                                alg: PassAlgorithm = PassAlgorithm.AUTO,
                                config: Optional[DispatchConfig] = None) -> Image:
    """
    垂直通道：转置，按行做一维极值，再转置回来

    @param {PassAlgorithm} alg - 一维算法，AUTO 按 config 的垂直阈值解析
    @returns {Image} 新图像，与 vertical_pass_direct 逐字节一致
    """
    alg = resolve(alg, w_v, Axis.VERTICAL, config)
    transposed = transpose_image(src)
    filtered = Image.from_array(_run_rows(transposed.pixels, w_v, op, border, alg))
    return transpose_image(filtered)


def morph_separable(src: Image, se: StructuringElement, op: OpKind,
                    border: BorderPolicy = BorderPolicy(),
                    h_alg: PassAlgorithm = PassAlgorithm.AUTO,
                    v_alg: PassAlgorithm = PassAlgorithm.AUTO,
                    v_strategy: VerticalStrategy = VerticalStrategy.DIRECT,
                    config: Optional[DispatchConfig] = None,
                    horizontal_first: bool = False) -> Image:
    """
    可分离腐蚀/膨胀

    常数边界取值不是该运算的单位元时改用暴力实现。

    @param {Image} src - 源图像
    @param {StructuringElement} se - 结构元素
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @param {PassAlgorithm} h_alg - 水平通道算法
    @param {PassAlgorithm} v_alg - 垂直通道算法
    @param {VerticalStrategy} v_strategy - 垂直通道实现方式
    @param {DispatchConfig} config - 调度配置
    @param {bool} horizontal_first - 先做水平通道
    @returns {Image} 新图像，与 morph_reference 逐字节一致
    """
    if border.is_constant and not border.is_identity_for(op):
        logger.warning(f"常数边界 {border} 不是{op.value}的单位元，改用暴力实现")
        return morph_reference(src, se, op, border)

    h_resolved = resolve(h_alg, se.w_h, Axis.HORIZONTAL, config)
    v_resolved = resolve(v_alg, se.w_v, Axis.VERTICAL, config)
    logger.debug("可分离%s: %dx%d, se=%s, border=%s, h=%s, v=%s/%s", op.value, src.width, src.height,
                 se, border, h_resolved.value, v_resolved.value, v_strategy.value)

    def vertical(image: Image) -> Image:
        if v_strategy is VerticalStrategy.VIA_TRANSPOSE:
            return vertical_pass_via_transpose(image, se.w_v, op, border, v_resolved)
        return vertical_pass_direct(image, se.w_v, op, border, v_resolved)

    def horizontal(image: Image) -> Image:
        return horizontal_pass(image, se.w_h, op, border, h_resolved)

    if horizontal_first:
        return vertical(horizontal(src))
    return horizontal(vertical(src))
