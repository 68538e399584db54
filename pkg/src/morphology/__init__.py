#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
形态学算法

@author: PankIns Team
@version: 3.0.0
"""

from .calibration import calibrate, choose_threshold
from .compound import (MorphOp, apply_operation, black_hat, closing, dilate, erode, gradient, opening,
                       top_hat)
from .dispatch import DEFAULT_CONFIG, ConfigSource, DispatchConfig, resolve
from .options import Axis, PassAlgorithm, VerticalStrategy
from .reference import morph_reference
from .separable import horizontal_pass, morph_separable, vertical_pass_direct, vertical_pass_via_transpose
from .sliding_extrema import OpCounter, linear_window_1d, van_herk_1d
from .transpose import Tile, interleave_round, transpose_image, transpose_tile, transpose_tile_scalar

__all__ = [
    'calibrate', 'choose_threshold',
    'MorphOp', 'apply_operation', 'erode', 'dilate', 'opening', 'closing', 'gradient', 'top_hat', 'black_hat',
    'DEFAULT_CONFIG', 'ConfigSource', 'DispatchConfig', 'resolve',
    'Axis', 'PassAlgorithm', 'VerticalStrategy',
    'morph_reference',
    'horizontal_pass', 'vertical_pass_direct', 'vertical_pass_via_transpose', 'morph_separable',
    'OpCounter', 'linear_window_1d', 'van_herk_1d',
    'Tile', 'interleave_round', 'transpose_image', 'transpose_tile', 'transpose_tile_scalar',
]
