"""
测试公共配置

提供随机图像生成器、3×3 样例图像，以及 --run-slow 选项（大尺寸验收用例默认跳过）。
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# 添加项目根目录到路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.model import Image  # noqa: E402

FIXTURE_3X3 = [[9, 8, 7], [6, 5, 4], [3, 2, 1]]
ERODE_3X3_REPLICATE = [[5, 4, 4], [2, 1, 1], [2, 1, 1]]


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="执行大尺寸验收用例")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="需要 --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    """固定种子的随机数生成器"""
    return np.random.default_rng(20160512)


@pytest.fixture
def random_image(rng):
    """生成指定尺寸的随机图像"""
    def make(width: int, height: int) -> Image:
        return Image.from_array(rng.integers(0, 256, size=(height, width), dtype=np.uint8))
    return make


@pytest.fixture
def fixture_3x3() -> Image:
    return Image.from_array(FIXTURE_3X3)
