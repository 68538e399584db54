#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
分块矩阵转置

n×n 分块的转置由 log2(n) 轮成对交错完成：第 k 轮把行号只在第 k 位不同的两行配对，
交换其中行号第 k 位与列块奇偶不一致位置上的 2^k 元素子块。
k=0 即 2×2 元素转置（VTRN 类指令），后续各轮相当于按 2^k 宽度重新解释元素后再做一次 2×2 转置。
每一轮都是对整块寄存器的置换，这里用 numpy 的轴交换在整批分块上一次完成。

整幅图像转置：内部用 16×16（8 位）分块，宽高不是 16 的倍数时边缘按行、列逐条复制。

@author: PankIns Team
@version: 3.0.0
"""

from dataclasses import dataclass

import numpy as np

from src.core.errors import InvalidParameterError, UnsupportedTileError
from src.core.model import PIXEL_DTYPE, Image, padded_stride
from src.utils.logger_config import get_logger

logger = get_logger(__name__)

TILE_SIDE = 16
VECTOR_BITS = 128

ELEMENT_DTYPES = {8: np.uint8, 16: np.uint16, 32: np.uint32}
VECTOR_TILES = frozenset({(4, 32), (8, 16), (16, 8)})


@dataclass(frozen=True)
class Tile:
    """
    分块规格：n×n 个 elem_bits 位元素

    向量路径要求一行恰好占满 128 位寄存器，即 (4,32)、(8,16)、(16,8)；
    标量路径接受 n ∈ {4, 8, 16} 与 elem_bits ∈ {8, 16, 32} 的任意组合。
    """

    n: int
    elem_bits: int

    @property
    def dtype(self):
        return ELEMENT_DTYPES[self.elem_bits]

    @property
    def rounds(self) -> int:
        return self.n.bit_length() - 1

    @property
    def is_vector(self) -> bool:
        return (self.n, self.elem_bits) in VECTOR_TILES

    def __str__(self) -> str:
        return f"{self.n}x{self.n}.{self.elem_bits}"


TILE_4x4_32 = Tile(4, 32)
TILE_8x8_16 = Tile(8, 16)
TILE_16x16_8 = Tile(16, 8)


def _check_tile(block: np.ndarray, tile: Tile, vector: bool) -> np.ndarray:
    if tile.n not in (4, 8, 16) or tile.elem_bits not in ELEMENT_DTYPES:
        raise UnsupportedTileError(tile.n, tile.elem_bits)
    if vector and not tile.is_vector:
        raise UnsupportedTileError(tile.n, tile.elem_bits, "向量路径要求 n×elem_bits = 128")
    block = np.asarray(block)
    if block.shape[-2:] != (tile.n, tile.n):
        raise InvalidParameterError(f"分块形状 {block.shape} 与规格 {tile} 不符")
    if block.dtype != tile.dtype:
        if block.size and (block.min() < 0 or block.max() >= (1 << tile.elem_bits)):
            raise InvalidParameterError(f"分块元素超出 {tile.elem_bits} 位范围")
        block = block.astype(tile.dtype)
    return block


def interleave_round(block: np.ndarray, k: int) -> np.ndarray:
    """
    一轮成对交错

    @param {np.ndarray} block - 形状 (..., n, n)，n 为 2 的幂，前导维为一批分块
    @param {int} k - 轮次，交换 2^k 元素子块
    @returns {np.ndarray} 新数组
    """
    n = block.shape[-1]
    half = 1 << k
    if block.shape[-2] != n or n & (n - 1) or half * 2 > n:
        raise InvalidParameterError(f"无法在 {block.shape} 上执行第 {k} 轮交错")
    group = n // (2 * half)
    lead = block.shape[:-2]
    d = len(lead)
    # 行号拆成 (组, 第k位, 低位)，列号同样拆分；交换两个"第k位"轴即完成本轮
    view = block.reshape(*lead, group, 2, half, group, 2, half)
    return np.ascontiguousarray(np.swapaxes(view, d + 1, d + 4)).reshape(block.shape)


def _tile_kernel(tiles: np.ndarray, rounds: int) -> np.ndarray:
    for k in range(rounds):
        tiles = interleave_round(tiles, k)
    return tiles


def transpose_tile(block: np.ndarray, tile: Tile) -> np.ndarray:
    """
    向量化分块转置：out[j][i] = block[i][j]

    @param {np.ndarray} block - n×n 分块（也可带前导批维）
    @param {Tile} tile - 分块规格，必须是向量路径支持的组合
    @returns {np.ndarray} 转置后的分块
    """
    block = _check_tile(block, tile, vector=True)
    return _tile_kernel(block, tile.rounds)


def transpose_tile_scalar(block: np.ndarray, tile: Tile) -> np.ndarray:
    """逐元素交换下标的分块转置，作为对照和基准"""
    block = _check_tile(block, tile, vector=False)
    n = tile.n
    out = np.empty_like(block)
    for i in range(n):
        for j in range(n):
            out[..., j, i] = block[..., i, j]
    return out


def transpose_image(src: Image) -> Image:
    """
    整幅图像转置：out(y, x) = src(x, y)

    @param {Image} src - 源图像
    @returns {Image} 宽为 src.height、高为 src.width 的新图像
    """
    height, width = src.height, src.width
    out = np.zeros((width, padded_stride(height)), dtype=PIXEL_DTYPE)
    pixels = src.pixels

    th, tw = height // TILE_SIDE, width // TILE_SIDE
    rows, cols = th * TILE_SIDE, tw * TILE_SIDE
    if th and tw:
        # (th, tw, 16, 16) 的分块批
        tiles = pixels[:rows, :cols].reshape(th, TILE_SIDE, tw, TILE_SIDE).swapaxes(1, 2)
        tiles = _tile_kernel(np.ascontiguousarray(tiles), TILE_16x16_8.rounds)
        # 源分块 (a, b) 转置后落在目标分块 (b, a)
        out[:cols, :rows] = tiles.transpose(1, 2, 0, 3).reshape(cols, rows)

    # 不足一个分块的边缘：底部剩余的每一行写成目标的一列，右侧剩余的每一列写成目标的一行
    for y in range(rows, height):
        out[:width, y] = pixels[y]
    for x in range(cols, width):
        out[x, :rows] = pixels[:rows, x]

    return Image.from_padded(out, height)


def transpose_image_scalar(src: Image) -> Image:
    """逐元素转置整幅图像，作为基准对照"""
    pixels = src.pixels
    out = np.zeros((src.width, padded_stride(src.height)), dtype=PIXEL_DTYPE)
    for y in range(src.height):
        row = pixels[y]
        for x in range(src.width):
            out[x, y] = row[x]
    return Image.from_padded(out, src.height)
