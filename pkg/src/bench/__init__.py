#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
基准测试

@author: PankIns Team
@version: 3.0.0
"""

from .harness import BenchRecord, TransposeRecord, parse_window_range, sweep_passes, sweep_transpose, write_csv

__all__ = ['BenchRecord', 'TransposeRecord', 'parse_window_range', 'sweep_passes', 'sweep_transpose', 'write_csv']
