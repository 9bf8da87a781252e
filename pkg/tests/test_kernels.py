"""The compiled and pure-Python kernels must agree exactly."""

import pytest
from hypothesis import given, settings, strategies as st

from inflectkit import _kernels_py, kernels

compiled = pytest.importorskip("inflectkit._kernels")

text = st.text(max_size=10)


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


@settings(max_examples=500)
@given(text.filter(bool), text.filter(bool))
def test_align_ops_agree(x, y):
    assert compiled.align_ops(x, y) == _kernels_py.align_ops(x, y)


@settings(max_examples=500)
@given(text, text)
def test_levenshtein_agree(a, b):
    assert compiled.levenshtein(a, b) == _kernels_py.levenshtein(a, b)


def test_astral_code_points():
    assert compiled.align_ops("a𝔸b", "ab") == _kernels_py.align_ops("a𝔸b", "ab") == ("MDM", 10)
    assert compiled.levenshtein("𝔸", "𝔹") == 1
