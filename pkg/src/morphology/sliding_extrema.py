#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
一维滑动极值

两种等价算法：
- 线性窗口：每个输出做 w-1 次比较，复杂度与窗口长度成线性；
- van Herk/Gil-Werman：把扩展序列切成长度 w 的块，块内做前向、后向累计极值，
  每个窗口最多跨两个相邻块，结果为 后向[窗口起点] 与 前向[窗口终点] 的极值，
  每个输出的比较次数与 w 无关。

两个算法都沿数组最后一维批量处理，一维序列只是单行的情形；
图像的水平、垂直通道直接复用这里的批量实现。

@author: PankIns Team
@version: 3.0.0
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.core.errors import InvalidParameterError
from src.core.model import PIXEL_DTYPE, BorderPolicy, OpKind, check_window, pad_along


@dataclass
class OpCounter:
    """两输入 min/max 运算计数器"""

    comparisons: int = 0

    def add(self, count: int):
        self.comparisons += int(count)

    def reset(self):
        self.comparisons = 0


def as_sequence(seq) -> np.ndarray:
    """把输入转换成一维 uint8 序列"""
    values = np.asarray(seq)
    if values.ndim != 1 or values.size < 1:
        raise InvalidParameterError(f"序列必须是一维且长度 ≥1，实际形状 {values.shape}")
    if values.dtype != PIXEL_DTYPE:
        if values.min() < 0 or values.max() > 255:
            raise InvalidParameterError("序列取值必须在 0..255 内")
        values = values.astype(PIXEL_DTYPE)
    return values


def linear_window_rows(rows: np.ndarray, w: int, op: OpKind, border: BorderPolicy,
                       counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    沿最后一维做线性窗口极值

    @param {np.ndarray} rows - 形状 (..., n) 的 uint8 数组
    @param {int} w - 奇数窗口长度
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @param {OpCounter} counter - 可选的比较计数器
    @returns {np.ndarray} 与输入同形状的新数组
    """
    wing = check_window(w)
    n = rows.shape[-1]
    if wing == 0:
        return rows.copy()

    padded = pad_along(rows, wing, rows.ndim - 1, border)
    out = padded[..., 0:n].copy()
    for k in range(1, w):
        op.reduce(out, padded[..., k:k + n], out=out)

    if counter is not None:
        counter.add((w - 1) * rows.size)
    return out


def van_herk_rows(rows: np.ndarray, w: int, op: OpKind, border: BorderPolicy,
                  counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    沿最后一维做 van Herk/Gil-Werman 窗口极值

    @param {np.ndarray} rows - 形状 (..., n) 的 uint8 数组
    @param {int} w - 奇数窗口长度
    @param {OpKind} op - 腐蚀或膨胀
    @param {BorderPolicy} border - 边界策略
    @param {OpCounter} counter - 可选的比较计数器
    @returns {np.ndarray} 与输入同形状的新数组
    """
    wing = check_window(w)
    n = rows.shape[-1]
    if wing == 0:
        return rows.copy()

    # 扩展后长度 L = n + w - 1 ≥ w，至少有一个完整块
    padded = pad_along(rows, wing, rows.ndim - 1, border)
    length = padded.shape[-1]
    full = length // w
    body = full * w
    lead = padded.shape[:-1]

    blocks = padded[..., :body].reshape(*lead, full, w)
    forward = np.empty_like(padded)
    forward[..., :body] = op.reduce.accumulate(blocks, axis=-1).reshape(*lead, body)
    # 末尾不完整块只需要截断的前向数组：后向数组只在 [0, n) 上被读取，而 body ≥ n
    tail = length - body
    if tail:
        forward[..., body:] = op.reduce.accumulate(padded[..., body:], axis=-1)
    backward = op.reduce.accumulate(blocks[..., ::-1], axis=-1)[..., ::-1].reshape(*lead, body)

    out = op.reduce(backward[..., 0:n], forward[..., w - 1:w - 1 + n])

    if counter is not None:
        lines = int(np.prod(lead, dtype=np.int64)) if lead else 1
        per_line = 2 * full * (w - 1) + max(tail - 1, 0) + n
        counter.add(per_line * lines)
    return out


def _van_herk_scalar_line(line: list, w: int, n: int, pick) -> list:
    length = len(line)
    forward = [0] * length
    backward = [0] * length
    for start in range(0, length, w):
        stop = min(start + w, length)
        acc = forward[start] = line[start]
        for i in range(start + 1, stop):
            acc = forward[i] = pick(acc, line[i])
        acc = backward[stop - 1] = line[stop - 1]
        for i in range(stop - 2, start - 1, -1):
            acc = backward[i] = pick(acc, line[i])
    return [pick(backward[i], forward[i + w - 1]) for i in range(n)]


def van_herk_scalar_rows(rows: np.ndarray, w: int, op: OpKind, border: BorderPolicy,
                         counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    逐元素循环的 van Herk/Gil-Werman，不做任何向量化

    与 van_herk_rows 同一算法、同一输出，用作基准测试中的非向量化对照。
    末尾不完整块也计算后向数组，比较次数因此比 van_herk_rows 多 tail-1。
    """
    wing = check_window(w)
    n = rows.shape[-1]
    if wing == 0:
        return rows.copy()

    padded = pad_along(rows, wing, rows.ndim - 1, border)
    length = padded.shape[-1]
    lines = padded.reshape(-1, length)
    pick = min if op is OpKind.ERODE else max
    out = np.empty((lines.shape[0], n), dtype=PIXEL_DTYPE)
    for k in range(lines.shape[0]):
        out[k] = _van_herk_scalar_line(lines[k].tolist(), w, n, pick)

    if counter is not None:
        full, tail = divmod(length, w)
        per_line = 2 * full * (w - 1) + 2 * max(tail - 1, 0) + n
        counter.add(per_line * lines.shape[0])
    return out.reshape(rows.shape)


def van_herk_scalar_1d(seq, w: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                       counter: Optional[OpCounter] = None) -> np.ndarray:
    """一维逐元素 van Herk，输出与 van_herk_1d 逐字节一致"""
    return van_herk_scalar_rows(as_sequence(seq), w, op, border, counter)


def linear_window_1d(seq, w: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                     counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    一维线性窗口极值：out(i) = extremum(sample(seq, i-wing .. i+wing))

    @returns {np.ndarray} 与输入等长的 uint8 序列
    """
    return linear_window_rows(as_sequence(seq), w, op, border, counter)


def van_herk_1d(seq, w: int, op: OpKind, border: BorderPolicy = BorderPolicy(),
                counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    一维 van Herk/Gil-Werman 窗口极值，输出与 linear_window_1d 逐字节一致

    @returns {np.ndarray} 与输入等长的 uint8 序列
    """
    return van_herk_rows(as_sequence(seq), w, op, border, counter)


def brute_force_1d(seq, w: int, op: OpKind, border: BorderPolicy = BorderPolicy()) -> np.ndarray:
    """逐窗口直接取极值，用作一维算法的对照"""
    wing = check_window(w)
    values = as_sequence(seq)
    n = values.size
    fill = border.constant_value if border.is_constant else None
    out = np.empty(n, dtype=PIXEL_DTYPE)
    for i in range(n):
        window = []
        for j in range(i - wing, i + wing + 1):
            if 0 <= j < n:
                window.append(int(values[j]))
            elif fill is not None:
                window.append(fill)
            else:
                window.append(int(values[min(max(j, 0), n - 1)]))
        out[i] = min(window) if op is OpKind.ERODE else max(window)
    return out
