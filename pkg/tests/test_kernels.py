"""The compiled line kernels must agree with the pure-Python ones everywhere."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glbranch import _lines, kernels

ckernels = pytest.importorskip("glbranch._ckernels")

int_seg = st.tuples(st.integers(-4, 5), st.integers(0, 4)).map(lambda t: (t[0], t[0] + t[1]))
int_line = st.lists(int_seg, max_size=7).map(lambda xs: tuple(sorted(xs)))


@settings(max_examples=400)
@given(int_line, int_seg)
def test_derivative_right_agrees(segs, d):
    assert ckernels.derivative_right(segs, *d) == _lines.derivative_right(segs, *d)


@settings(max_examples=400)
@given(int_line, int_seg)
def test_integral_right_agrees(segs, d):
    assert ckernels.integral_right(segs, *d) == _lines.integral_right(segs, *d)


@pytest.mark.parametrize("name", ["mw_dual", "hd_right_z", "ul", "is_generic"])
@settings(max_examples=300)
@given(segs=int_line)
def test_unary_kernels_agree(name, segs):
    assert getattr(ckernels, name)(segs) == getattr(_lines, name)(segs)


def test_dispatch_uses_compiled_kernels():
    assert kernels.backend == "cython"
    assert kernels.derivative_right is ckernels.derivative_right


@pytest.mark.parametrize("value, expected", [("1", "python"), ("0", "cython")])
def test_environment_switch(value, expected):
    env = dict(os.environ, GLBRANCH_PURE=value)
    out = subprocess.run(
        [sys.executable, "-c", "import glbranch; print(glbranch.backend)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected


def test_pure_backend_decides_worked_example():
    code = (
        "from fractions import Fraction as F\n"
        "from glbranch import *\n"
        "R = CuspidalLabel('R')\n"
        "pi = IrrRep(Multisegment.simple(R, (F(1, 2), F(9, 2)), (F(7, 2), F(13, 2))))\n"
        "pi2 = IrrRep(Multisegment.simple(R, (0, 3), (3, 6)))\n"
        "c = decide_relevant(pi, pi2)\n"
        "print(backend, c.relevant, c.p, c.q)\n"
    )
    env = dict(os.environ, GLBRANCH_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python True [1,2]@R + [4,7]@R [0,3]@R + [6,6]@R"


@pytest.mark.parametrize(
    "segs, d, expected",
    [
        (((1, 5), (4, 7)), (1, 2), ((3, 5), (4, 7))),
        (((3, 5), (4, 7)), (4, 7), ((3, 5),)),
        (((0, 2),), (5, 6), None),
        (((0, 3),), (0, 1), ((2, 3),)),
    ],
)
def test_derivative_right_values(segs, d, expected):
    for impl in (_lines, ckernels):
        assert impl.derivative_right(segs, *d) == expected
