#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
核心数据模型

定义所有模块共享的图像、结构元素、边界策略和运算类型，
以及按边界策略取样的函数。边界语义只在本模块定义。

@author: PankIns Team
@version: 3.0.0
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import EvenExtentError, InvalidImageError, InvalidParameterError, ZeroExtentError

PIXEL_DTYPE = np.uint8
STRIDE_ALIGN = 16


def padded_stride(width: int) -> int:
    """宽度向上取整到 16 的倍数"""
    return -(-width // STRIDE_ALIGN) * STRIDE_ALIGN


class OpKind(Enum):
    """运算类型：腐蚀取最小值，膨胀取最大值"""

    ERODE = "erode"
    DILATE = "dilate"

    @property
    def reduce(self) -> np.ufunc:
        """两输入逐元素极值"""
        return np.minimum if self is OpKind.ERODE else np.maximum

    @property
    def identity(self) -> int:
        """极值运算的单位元"""
        return 255 if self is OpKind.ERODE else 0

    @property
    def dual(self) -> "OpKind":
        return OpKind.DILATE if self is OpKind.ERODE else OpKind.ERODE


class BorderKind(Enum):
    REPLICATE = "replicate"
    CONSTANT = "constant"


@dataclass(frozen=True)
class BorderPolicy:
    """
    边界策略

    REPLICATE 把越界坐标钳制到最近的有效像素；CONSTANT 用 constant_value 替代越界样本。
    """

    kind: BorderKind = BorderKind.REPLICATE
    constant_value: int = 0

    def __post_init__(self):
        if not 0 <= int(self.constant_value) <= 255:
            raise InvalidParameterError(f"边界常数必须在 0..255 内: {self.constant_value}")

    @classmethod
    def replicate(cls) -> "BorderPolicy":
        return cls(BorderKind.REPLICATE)

    @classmethod
    def constant(cls, value: int) -> "BorderPolicy":
        return cls(BorderKind.CONSTANT, int(value))

    @classmethod
    def parse(cls, text: str) -> "BorderPolicy":
        """
        解析命令行写法

        @param {str} text - "replicate" 或 "constant:V"
        @returns {BorderPolicy} 边界策略
        """
        value = text.strip().lower()
        if value == "replicate":
            return cls.replicate()
        if value.startswith("constant:"):
            raw = value.split(":", 1)[1]
            if not raw.isdigit():
                raise InvalidParameterError(f"边界常数不是整数: {text}")
            return cls.constant(int(raw))
        raise InvalidParameterError(f"未知的边界策略: {text}")

    @property
    def is_constant(self) -> bool:
        return self.kind is BorderKind.CONSTANT

    def complement(self) -> "BorderPolicy":
        """强度取反 v -> 255 - v 后对应的边界策略（复制边界不变）"""
        if self.is_constant:
            return BorderPolicy.constant(255 - self.constant_value)
        return self

    def is_identity_for(self, op: OpKind) -> bool:
        """常数边界取值是否为该运算的单位元（此时等价于忽略越界样本）"""
        return self.is_constant and self.constant_value == op.identity

    def __str__(self) -> str:
        if self.is_constant:
            return f"constant:{self.constant_value}"
        return "replicate"


@dataclass(frozen=True)
class StructuringElement:
    """
    平坦矩形结构元素，锚点在中心

    w_h 为水平尺寸（沿行），w_v 为垂直尺寸（沿列），均为奇数。
    """

    w_h: int
    w_v: int

    def __post_init__(self):
        check_window(self.w_h)
        check_window(self.w_v)

    @property
    def wing_h(self) -> int:
        return (self.w_h - 1) // 2

    @property
    def wing_v(self) -> int:
        return (self.w_v - 1) // 2

    def __str__(self) -> str:
        return f"{self.w_h}x{self.w_v}"


def check_window(w: int) -> int:
    """
    校验一维窗口长度

    @param {int} w - 窗口长度
    @returns {int} 翼长 (w-1)/2
    """
    if w < 1:
        raise ZeroExtentError(w)
    if w % 2 == 0:
        raise EvenExtentError(w)
    return (w - 1) // 2


def make_se(w_h: int, w_v: int) -> StructuringElement:
    """构造结构元素；任一尺寸为 0 时报 ZeroExtentError，为偶数时报 EvenExtentError"""
    return StructuringElement(int(w_h), int(w_v))


@dataclass(frozen=True, eq=False)
class Image:
    """
    8 位灰度图像

    data 为按行存储的一维只读缓冲区，长度 stride × height；像素 (x, y) 位于 y·stride + x。
    x ≥ width 的填充字节没有意义，不影响任何可见输出。
    """

    width: int
    height: int
    stride: int
    data: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InvalidImageError(f"图像尺寸必须 ≥1: {self.width}x{self.height}")
        if self.stride < self.width:
            raise InvalidImageError(f"步长 {self.stride} 小于宽度 {self.width}")
        if self.data.dtype != PIXEL_DTYPE or self.data.ndim != 1:
            raise InvalidImageError(f"缓冲区必须是一维 uint8，实际为 {self.data.dtype}{self.data.shape}")
        if self.data.size != self.stride * self.height:
            raise InvalidImageError(
                f"缓冲区长度 {self.data.size} 不等于 stride×height = {self.stride * self.height}"
            )
        self.data.flags.writeable = False

    @classmethod
    def from_array(cls, pixels, stride: Optional[int] = None) -> "Image":
        """
        由二维数组构造图像（复制数据，步长默认按 16 对齐）

        @param {array_like} pixels - 形状 (height, width) 的像素值，范围 0..255
        @param {int} stride - 可选的行步长
        @returns {Image} 新图像
        """
        array = np.asarray(pixels)
        if array.ndim != 2:
            raise InvalidImageError(f"像素数组必须是二维，实际维度 {array.ndim}")
        height, width = array.shape
        if width < 1 or height < 1:
            raise InvalidImageError(f"图像尺寸必须 ≥1: {width}x{height}")
        if array.dtype != PIXEL_DTYPE:
            if array.size and (array.min() < 0 or array.max() > 255):
                raise InvalidImageError("像素值必须在 0..255 内")
            array = array.astype(PIXEL_DTYPE)

        stride = padded_stride(width) if stride is None else stride
        if stride < width:
            raise InvalidImageError(f"步长 {stride} 小于宽度 {width}")
        buffer = np.zeros((height, stride), dtype=PIXEL_DTYPE)
        buffer[:, :width] = array
        return cls(width, height, stride, buffer.reshape(-1))

    @classmethod
    def from_padded(cls, buffer: np.ndarray, width: int) -> "Image":
        """接管一个 (height, stride) 的缓冲区作为图像，不复制"""
        height, stride = buffer.shape
        return cls(width, height, stride, np.ascontiguousarray(buffer, dtype=PIXEL_DTYPE).reshape(-1))

    @property
    def padded(self) -> np.ndarray:
        """(height, stride) 只读视图，包含填充列"""
        return self.data.reshape(self.height, self.stride)

    @property
    def pixels(self) -> np.ndarray:
        """(height, width) 只读视图，仅可见像素"""
        return self.padded[:, :self.width]

    def to_array(self) -> np.ndarray:
        """可见像素的可写副本"""
        return self.pixels.copy()

    def pixel(self, x: int, y: int) -> int:
        return int(self.data[y * self.stride + x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (self.width == other.width and self.height == other.height
                and np.array_equal(self.pixels, other.pixels))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Image({self.width}x{self.height}, stride={self.stride})"


def sample(img: Image, x: int, y: int, border: BorderPolicy) -> int:
    """
    按边界策略取样

    @param {Image} img - 图像
    @param {int} x - 列坐标，可越界
    @param {int} y - 行坐标，可越界
    @param {BorderPolicy} border - 边界策略
    @returns {int} 像素值
    """
    if 0 <= x < img.width and 0 <= y < img.height:
        return img.pixel(x, y)
    if border.is_constant:
        return border.constant_value
    cx = min(max(x, 0), img.width - 1)
    cy = min(max(y, 0), img.height - 1)
    return img.pixel(cx, cy)


def sample_grid(img: Image, xs: np.ndarray, ys: np.ndarray, border: BorderPolicy) -> np.ndarray:
    """
    sample 的数组形式，xs 与 ys 可广播

    @returns {np.ndarray} 与广播形状一致的 uint8 数组
    """
    xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
    cx = np.clip(xs, 0, img.width - 1)
    cy = np.clip(ys, 0, img.height - 1)
    values = img.pixels[cy, cx]
    if border.is_constant:
        inside = (xs >= 0) & (xs < img.width) & (ys >= 0) & (ys < img.height)
        values = np.where(inside, values, np.uint8(border.constant_value))
    return values.astype(PIXEL_DTYPE, copy=False)


def pad_along(array: np.ndarray, wing: int, axis: int, border: BorderPolicy) -> np.ndarray:
    """
    沿指定轴两侧各扩展 wing 个样本，扩展值由边界策略决定

    @param {np.ndarray} array - 输入数组
    @param {int} wing - 单侧扩展长度
    @param {int} axis - 扩展的轴
    @param {BorderPolicy} border - 边界策略
    @returns {np.ndarray} 新数组
    """
    array = np.asarray(array)
    axis %= array.ndim
    if wing == 0:
        return array.copy()
    index = [slice(None)] * array.ndim
    if border.is_constant:
        shape = list(array.shape)
        shape[axis] = wing
        before = after = np.full(shape, border.constant_value, dtype=array.dtype)
    else:
        index[axis] = slice(0, 1)
        before = np.repeat(array[tuple(index)], wing, axis=axis)
        index[axis] = slice(-1, None)
        after = np.repeat(array[tuple(index)], wing, axis=axis)
    return np.concatenate((before, array, after), axis=axis)
