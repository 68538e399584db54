#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
图像文件格式

@author: PankIns Team
@version: 3.0.0
"""

from .pgm import PgmVariant, load_pgm, read_pgm, save_pgm, write_pgm

__all__ = ['PgmVariant', 'read_pgm', 'write_pgm', 'load_pgm', 'save_pgm']
