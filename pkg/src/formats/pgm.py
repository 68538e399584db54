#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
PGM 读写

支持 P5（二进制）与 P2（ASCII），maxval 只支持 255。
读取时接受文件头中的注释（# 到行尾），写出时使用规范格式且不写注释：
    P5\\n<宽> <高>\\n255\\n + 宽×高 个像素字节
    P2\\n<宽> <高>\\n255\\n + 每行一行文本，单空格分隔

@author: PankIns Team
@version: 3.0.0
"""

from enum import Enum
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from src.core.errors import (BadHeaderError, BadMagicError, BadPixelDataError, TruncatedDataError,
                             UnsupportedMaxvalError)
from src.core.model import PIXEL_DTYPE, Image
from src.utils.logger_config import get_logger

logger = get_logger(__name__)

WHITESPACE = b" \t\r\n\v\f"


class PgmVariant(Enum):
    P5 = "P5"
    P2 = "P2"

    @property
    def magic(self) -> bytes:
        return self.value.encode("ascii")


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        if data[pos] in WHITESPACE:
            pos += 1
        elif data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        else:
            break
    return pos


def _read_header_int(data: bytes, pos: int, name: str) -> Tuple[int, int]:
    pos = _skip_space_and_comments(data, pos)
    start = pos
    while pos < len(data) and data[pos:pos + 1].isdigit():
        pos += 1
    if start == pos:
        raise BadHeaderError(f"PGM 文件头缺少{name}")
    if pos < len(data) and data[pos] not in WHITESPACE and data[pos:pos + 1] != b"#":
        raise BadHeaderError(f"PGM 文件头{name}不是十进制整数")
    return int(data[start:pos]), pos


def _parse_header(data: bytes) -> Tuple[PgmVariant, int, int, int]:
    magic = data[:2]
    if magic == b"P5":
        variant = PgmVariant.P5
    elif magic == b"P2":
        variant = PgmVariant.P2
    else:
        raise BadMagicError(f"不是 P5/P2 格式的 PGM 文件，魔数为 {magic!r}")
    if len(data) < 3 or data[2] not in WHITESPACE:
        raise BadHeaderError("PGM 魔数后缺少空白分隔")

    width, pos = _read_header_int(data, 2, "宽度")
    height, pos = _read_header_int(data, pos, "高度")
    maxval, pos = _read_header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise BadHeaderError(f"PGM 尺寸必须 ≥1: {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxvalError(maxval)
    return variant, width, height, pos


def _decode_p5(data: bytes, pos: int, width: int, height: int) -> np.ndarray:
    # maxval 之后恰好一个空白字符，随后是像素字节
    pos += 1
    expected = width * height
    body = data[pos:pos + expected]
    if len(body) < expected:
        raise TruncatedDataError(expected, len(body))
    return np.frombuffer(body, dtype=PIXEL_DTYPE).reshape(height, width)


def _decode_p2(data: bytes, pos: int, width: int, height: int) -> np.ndarray:
    expected = width * height
    tokens: List[bytes] = []
    for line in data[pos:].splitlines():
        tokens.extend(line.split(b"#", 1)[0].split())
        if len(tokens) >= expected:
            break
    if len(tokens) < expected:
        raise TruncatedDataError(expected, len(tokens))
    values = []
    for token in tokens[:expected]:
        if not token.isdigit():
            raise BadPixelDataError(f"P2 像素值不是整数: {token!r}")
        value = int(token)
        if value > 255:
            raise BadPixelDataError(f"P2 像素值超出 255: {value}")
        values.append(value)
    return np.array(values, dtype=PIXEL_DTYPE).reshape(height, width)


def read_pgm(data: bytes) -> Image:
    """
    解析 PGM 字节

    @param {bytes} data - 文件内容
    @returns {Image} 图像（步长按 16 对齐）
    """
    variant, width, height, pos = _parse_header(data)
    if variant is PgmVariant.P5:
        pixels = _decode_p5(data, pos, width, height)
    else:
        pixels = _decode_p2(data, pos, width, height)
    logger.debug(f"读取 {variant.value} 图像: {width}x{height}")
    return Image.from_array(pixels)


def write_pgm(img: Image, variant: PgmVariant = PgmVariant.P5) -> bytes:
    """
    规范格式写出（去掉步长填充）

    @param {Image} img - 图像
    @param {PgmVariant} variant - P5 或 P2
    @returns {bytes} 文件内容
    """
    header = variant.magic + f"\n{img.width} {img.height}\n255\n".encode("ascii")
    pixels = img.pixels
    if variant is PgmVariant.P5:
        return header + np.ascontiguousarray(pixels).tobytes()
    lines = [" ".join(str(int(v)) for v in row) + "\n" for row in pixels]
    return header + "".join(lines).encode("ascii")


def load_pgm(path: Union[str, Path]) -> Image:
    """从文件读取 PGM"""
    return read_pgm(Path(path).read_bytes())


def save_pgm(path: Union[str, Path], img: Image, variant: PgmVariant = PgmVariant.P5):
    """写出 PGM 文件"""
    Path(path).write_bytes(write_pgm(img, variant))
    logger.debug(f"写出 {variant.value} 图像: {path}")
