#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
基准测试工具

单线程计时：单调时钟，1 次预热，取 reps 次的中位数（纳秒）。
计时期间进程内不应有其他负载。

CSV 列固定为 axis,algorithm,window,image_w,image_h,reps,median_ns，LF 换行。

@author: PankIns Team
@version: 3.0.0
"""

import csv
import statistics
import time
from pathlib import Path
from typing import Callable, Iterable, List, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.core.errors import BadRangeError, InsufficientRepsError, MorphologyError
from src.core.model import Image, OpKind, check_window
from src.morphology.options import Axis, PassAlgorithm
from src.morphology.separable import horizontal_pass, vertical_pass_direct
from src.morphology.transpose import (TILE_4x4_32, TILE_8x8_16, TILE_16x16_8, Tile, transpose_image,
                                      transpose_image_scalar, transpose_tile, transpose_tile_scalar)
from src.utils.logger_config import get_logger, get_performance_logger

logger = get_logger(__name__)
perf_logger = get_performance_logger()

CSV_HEADER = ("axis", "algorithm", "window", "image_w", "image_h", "reps", "median_ns")
DEFAULT_SEED = 20160512
MIN_REPS = 3
TRANSPOSE_TILES = (TILE_4x4_32, TILE_8x8_16, TILE_16x16_8)


class BenchRecord(BaseModel):
    """一条通道计时记录"""

    model_config = ConfigDict(frozen=True)

    axis: Axis
    algorithm: PassAlgorithm
    window: int
    image_w: int = Field(ge=1)
    image_h: int = Field(ge=1)
    reps: int = Field(ge=1)
    median_ns: int = Field(gt=0)

    @field_validator("algorithm")
    @classmethod
    def _concrete_algorithm(cls, value: PassAlgorithm) -> PassAlgorithm:
        if value is PassAlgorithm.AUTO:
            raise ValueError("计时记录必须是具体算法，不能是 auto")
        return value

    @field_validator("window")
    @classmethod
    def _odd_window(cls, value: int) -> int:
        try:
            check_window(value)
        except MorphologyError as e:
            raise ValueError(e.message) from e
        return value

    def to_row(self) -> tuple:
        return (self.axis.value, self.algorithm.value, self.window,
                self.image_w, self.image_h, self.reps, self.median_ns)


class TransposeRecord(BaseModel):
    """一条转置计时记录：subject 为分块规格（如 16x16.8）或整幅图像尺寸"""

    model_config = ConfigDict(frozen=True)

    method: str = Field(pattern=r"^(tiled|scalar)$")
    subject: str
    image_w: int = Field(ge=1)
    image_h: int = Field(ge=1)
    reps: int = Field(ge=1)
    median_ns: int = Field(gt=0)

    def to_row(self) -> tuple:
        return ("transpose", self.method, self.subject,
                self.image_w, self.image_h, self.reps, self.median_ns)


Record = Union[BenchRecord, TransposeRecord]


def random_image(width: int, height: int, seed: int = DEFAULT_SEED) -> Image:
    """固定种子的伪随机图像"""
    rng = np.random.default_rng(seed)
    return Image.from_array(rng.integers(0, 256, size=(height, width), dtype=np.uint8))


def median_ns(fn: Callable[[], object], reps: int, warmup: int = 1) -> int:
    """
    计时一个无参函数

    @param {Callable} fn - 被测函数
    @param {int} reps - 计时次数
    @param {int} warmup - 预热次数
    @returns {int} 中位数耗时（纳秒，至少为 1）
    """
    if reps < 1:
        raise InsufficientRepsError(reps, 1)
    for _ in range(warmup):
        fn()
    samples = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - start)
    return max(1, int(statistics.median(samples)))


def run_pass(image: Image, axis: Axis, alg: PassAlgorithm, window: int,
             op: OpKind = OpKind.ERODE) -> Image:
    """
    执行被测通道

    与 erode/dilate 的调度走同一条路径：水平通道按行处理，
    垂直通道用 vertical_pass_direct（线性为两行共享，van Herk 沿列分块）。
    """
    if axis is Axis.HORIZONTAL:
        return horizontal_pass(image, window, op, alg=alg)
    return vertical_pass_direct(image, window, op, alg=alg)


def time_pass(image: Image, axis: Axis, alg: PassAlgorithm, window: int, reps: int,
              op: OpKind = OpKind.ERODE) -> BenchRecord:
    """计时一个通道并记录到性能日志"""
    elapsed = median_ns(lambda: run_pass(image, axis, alg, window, op), reps)
    record = BenchRecord(axis=axis, algorithm=alg, window=window, image_w=image.width,
                         image_h=image.height, reps=reps, median_ns=elapsed)
    perf_logger.info(",".join(str(v) for v in record.to_row()))
    return record


def sweep_passes(image: Image, windows: Sequence[int], reps: int,
                 op: OpKind = OpKind.ERODE, scalar_baseline: bool = False) -> List[BenchRecord]:
    """
    对两个方向、两种算法扫描所有窗口

    @param {bool} scalar_baseline - 追加逐元素 van Herk 的计时（非向量化对照）
    @returns {List[BenchRecord]} 2·2·len(windows) 条记录，scalar_baseline 时为 2·3·len(windows)
    """
    algorithms = [PassAlgorithm.LINEAR, PassAlgorithm.VAN_HERK]
    if scalar_baseline:
        algorithms.append(PassAlgorithm.VAN_HERK_SCALAR)
    records = []
    for axis in (Axis.HORIZONTAL, Axis.VERTICAL):
        for alg in algorithms:
            for window in windows:
                records.append(time_pass(image, axis, alg, window, reps, op))
        logger.info(f"{axis.value} 通道扫描完成: {len(windows)} 个窗口")
    return records


def _random_tile(tile: Tile, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << tile.elem_bits, size=(tile.n, tile.n), dtype=tile.dtype)


def sweep_transpose(image: Image, reps: int, seed: int = DEFAULT_SEED) -> List[TransposeRecord]:
    """分块转置与整幅转置：向量化分块 vs 逐元素"""
    records = []
    size = dict(image_w=image.width, image_h=image.height, reps=reps)
    for tile in TRANSPOSE_TILES:
        block = _random_tile(tile, seed)
        tiled = median_ns(lambda: transpose_tile(block, tile), reps)
        scalar = median_ns(lambda: transpose_tile_scalar(block, tile), reps)
        records.append(TransposeRecord(method="tiled", subject=str(tile), median_ns=tiled, **size))
        records.append(TransposeRecord(method="scalar", subject=str(tile), median_ns=scalar, **size))

    subject = f"{image.width}x{image.height}"
    tiled = median_ns(lambda: transpose_image(image), reps)
    scalar = median_ns(lambda: transpose_image_scalar(image), reps)
    records.append(TransposeRecord(method="tiled", subject=subject, median_ns=tiled, **size))
    records.append(TransposeRecord(method="scalar", subject=subject, median_ns=scalar, **size))
    for record in records:
        perf_logger.info(",".join(str(v) for v in record.to_row()))
    return records


def write_csv(records: Iterable[Record], path: Union[str, Path]):
    """写出固定表头的 CSV（LF 换行）"""
    with open(path, "w", encoding="ascii", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in records:
            writer.writerow(record.to_row())


def parse_window_range(text: str) -> List[int]:
    """
    解析窗口范围 MIN..MAX[:STEP]

    端点必须为奇数且 MIN ≤ MAX；步长默认 2，必须为正偶数以保持窗口为奇数。

    @param {str} text - 范围文本，如 "3..127" 或 "3..31:4"
    @returns {List[int]} 升序的奇数窗口
    """
    body, _, step_text = text.strip().partition(":")
    low_text, sep, high_text = body.partition("..")
    if not sep:
        raise BadRangeError(f"窗口范围格式应为 MIN..MAX[:STEP]: {text}")
    try:
        low, high = int(low_text), int(high_text)
        step = int(step_text) if step_text else 2
    except ValueError as e:
        raise BadRangeError(f"窗口范围包含非整数: {text}") from e
    if low < 1 or low % 2 == 0 or high % 2 == 0:
        raise BadRangeError(f"窗口范围端点必须是 ≥1 的奇数: {text}")
    if low > high:
        raise BadRangeError(f"窗口范围 MIN > MAX: {text}")
    if step < 2 or step % 2:
        raise BadRangeError(f"窗口步长必须是正偶数: {text}")
    return list(range(low, high + 1, step))


def check_reps(reps: int):
    if reps < MIN_REPS:
        raise InsufficientRepsError(reps, MIN_REPS)
