#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
调度阈值标定

在本机上对每个方向、每个窗口比较线性实现与 van Herk 实现的中位耗时，
阈值取线性实现不慢于 van Herk 的最大窗口；线性从未胜出时阈值为 1。

标定必须单线程运行，期间不应有其他负载。

@author: PankIns Team
@version: 3.0.0
"""

from typing import Dict, List, Optional, Sequence, Tuple

from src.core.errors import BadRangeError
from src.core.model import OpKind, check_window
from src.utils.logger_config import get_logger

from .dispatch import ConfigSource, DispatchConfig
from .options import Axis, PassAlgorithm

logger = get_logger(__name__)

# (窗口, 线性中位耗时, van Herk 中位耗时)
Timing = Tuple[int, int, int]


def choose_threshold(timings: Sequence[Timing]) -> int:
    """
    由计时结果选择阈值

    @param {Sequence[Timing]} timings - 按窗口升序的计时
    @returns {int} 线性实现胜出（≤）的最大窗口，从未胜出时为 1
    """
    winners = [window for window, linear_ns, van_herk_ns in timings if linear_ns <= van_herk_ns]
    return max(winners) if winners else 1


def _check_windows(windows: Sequence[int]):
    if not windows:
        raise BadRangeError("标定窗口列表为空")
    for window in windows:
        check_window(window)
    if list(windows) != sorted(windows):
        raise BadRangeError(f"标定窗口必须升序: {list(windows)}")


def calibrate(image_dims: Tuple[int, int], windows: Sequence[int], reps: int = 21,
              seed: Optional[int] = None, op: OpKind = OpKind.ERODE) -> DispatchConfig:
    """
    标定两个方向的交叉阈值

    @param {Tuple[int, int]} image_dims - 随机图像尺寸 (宽, 高)
    @param {Sequence[int]} windows - 升序奇数窗口
    @param {int} reps - 每次计时的重复次数，至少 3
    @param {int} seed - 随机图像种子
    @param {OpKind} op - 计时用的运算
    @returns {DispatchConfig} source 为 calibrated 的配置
    """
    # src.morphology 包初始化时导入本模块，而 harness 依赖该包，只能在调用时导入
    from src.bench.harness import DEFAULT_SEED, check_reps, random_image, time_pass

    check_reps(reps)
    _check_windows(windows)
    width, height = image_dims
    image = random_image(width, height, DEFAULT_SEED if seed is None else seed)

    thresholds: Dict[Axis, int] = {}
    for axis in (Axis.HORIZONTAL, Axis.VERTICAL):
        timings: List[Timing] = []
        for window in windows:
            linear = time_pass(image, axis, PassAlgorithm.LINEAR, window, reps, op)
            van_herk = time_pass(image, axis, PassAlgorithm.VAN_HERK, window, reps, op)
            timings.append((window, linear.median_ns, van_herk.median_ns))
        thresholds[axis] = choose_threshold(timings)
        logger.info(f"{axis.value} 通道标定阈值: {thresholds[axis]}")

    return DispatchConfig(
        threshold_h=thresholds[Axis.HORIZONTAL],
        threshold_v=thresholds[Axis.VERTICAL],
        source=ConfigSource.CALIBRATED,
    )
