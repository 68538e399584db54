#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行

@author: PankIns Team
@version: 3.0.0
"""

from .commands import main

__all__ = ['main']
