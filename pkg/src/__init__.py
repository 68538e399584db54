#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
快速可分离灰度形态学

@author: PankIns Team
@version: 3.0.0
"""

__version__ = "3.0.0"
__author__ = "PankIns Team"
