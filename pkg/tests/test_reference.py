"""
暴力实现测试

定义层面的样例，以及与 scipy.ndimage 灰度形态学的交叉验证。
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy import ndimage

from src.core.model import BorderPolicy, Image, OpKind, make_se
from src.morphology.reference import morph_reference

from .conftest import ERODE_3X3_REPLICATE, FIXTURE_3X3

images = arrays(np.uint8, st.tuples(st.integers(1, 12), st.integers(1, 12)))
odd = st.integers(0, 4).map(lambda k: 2 * k + 1)


def _scipy(pixels: np.ndarray, se, op: OpKind, border: BorderPolicy) -> np.ndarray:
    fn = ndimage.grey_erosion if op is OpKind.ERODE else ndimage.grey_dilation
    size = (se.w_v, se.w_h)
    if border.is_constant:
        return fn(pixels, size=size, mode="constant", cval=border.constant_value)
    return fn(pixels, size=size, mode="nearest")


def test_fixture_erode(fixture_3x3):
    out = morph_reference(fixture_3x3, make_se(3, 3), OpKind.ERODE)
    assert out.pixels.tolist() == ERODE_3X3_REPLICATE


def test_fixture_dilate(fixture_3x3):
    out = morph_reference(fixture_3x3, make_se(3, 3), OpKind.DILATE)
    assert out.pixels.tolist() == [[9, 9, 8], [9, 9, 8], [6, 6, 5]]


@pytest.mark.parametrize("op", list(OpKind))
def test_single_pixel_window_is_identity(random_image, op):
    src = random_image(7, 5)
    assert morph_reference(src, make_se(1, 1), op) == src


@pytest.mark.parametrize("op", list(OpKind))
def test_constant_image(op):
    src = Image.from_array(np.full((6, 9), 42, dtype=np.uint8))
    out = morph_reference(src, make_se(5, 3), op)
    assert np.all(out.pixels == 42)


def test_constant_border_enters_window():
    src = Image.from_array(np.full((3, 3), 100, dtype=np.uint8))
    out = morph_reference(src, make_se(3, 3), OpKind.ERODE, BorderPolicy.constant(7))
    assert out.pixels.tolist() == [[7, 7, 7], [7, 100, 7], [7, 7, 7]]


def test_output_is_new_image(random_image):
    src = random_image(4, 4)
    out = morph_reference(src, make_se(3, 3), OpKind.ERODE)
    assert out.data is not src.data
    assert out.stride == 16


@settings(max_examples=60, deadline=None)
@given(pixels=images, w_h=odd, w_v=odd, op=st.sampled_from(list(OpKind)),
       border=st.sampled_from([BorderPolicy.replicate(), BorderPolicy.constant(0),
                               BorderPolicy.constant(255), BorderPolicy.constant(90)]))
def test_matches_scipy(pixels, w_h, w_v, op, border):
    se = make_se(w_h, w_v)
    out = morph_reference(Image.from_array(pixels), se, op, border)
    assert np.array_equal(out.pixels, _scipy(pixels, se, op, border))


@settings(max_examples=40, deadline=None)
@given(pixels=images, w_h=odd, w_v=odd)
def test_duality_and_ordering(pixels, w_h, w_v):
    se = make_se(w_h, w_v)
    src = Image.from_array(pixels)
    eroded = morph_reference(src, se, OpKind.ERODE)
    dilated = morph_reference(src, se, OpKind.DILATE)
    complement = Image.from_array(255 - pixels)
    assert np.array_equal(dilated.pixels, 255 - morph_reference(complement, se, OpKind.ERODE).pixels)
    assert np.all(eroded.pixels <= pixels)
    assert np.all(pixels <= dilated.pixels)


def test_interior_ignores_border(random_image):
    src = random_image(11, 9)
    se = make_se(3, 5)
    a = morph_reference(src, se, OpKind.ERODE, BorderPolicy.replicate())
    b = morph_reference(src, se, OpKind.ERODE, BorderPolicy.constant(0))
    assert np.array_equal(a.pixels[2:-2, 1:-1], b.pixels[2:-2, 1:-1])


def test_monotone_in_input(random_image, rng):
    src = random_image(10, 10)
    brighter = Image.from_array(np.maximum(src.pixels, rng.integers(0, 256, (10, 10), dtype=np.uint8)))
    se = make_se(3, 3)
    for op in OpKind:
        assert np.all(morph_reference(src, se, op).pixels <= morph_reference(brighter, se, op).pixels)
