#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
配置模块

@author: PankIns Team
@version: 3.0.0
"""

from .settings import Settings

__all__ = ['Settings']
