#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Pank Morph 主程序入口

快速可分离灰度形态学命令行工具：
- apply：对 PGM 图像执行腐蚀、膨胀、开闭运算、梯度、顶帽
- bench：线性与 van Herk 通道算法的计时扫描
- calibrate：标定本机的调度阈值

用法示例：
    python main.py apply --op erode --se 3x3 in.pgm out.pgm
    python main.py bench --windows 3..31 --reps 5 --out bench.csv
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
