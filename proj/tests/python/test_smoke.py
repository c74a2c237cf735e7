"""Smoke tests for the hildenpy extension module."""

import os

import pytest

hildenpy = pytest.importorskip("hildenpy")


def data_dir():
    env = os.environ.get("HILDEN_DATA")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "..", "..", "data")


def test_normal_form():
    assert hildenpy.normal_form("s2 s1^-1", 3) == "delta^-1 [s1] [s1 s2]"
    assert hildenpy.normal_form("", 4) == "delta^0"


def test_word_problem():
    assert hildenpy.braid_equal("s1 s2 s1", "s2 s1 s2", 3) is True
    assert hildenpy.braid_equal("s1", "s2", 3) is False
    with pytest.raises(ValueError):
        hildenpy.braid_equal("sX", "s1", 3)


def test_braid_invariants():
    assert hildenpy.exponent_sum("2 1 -3 -2", 4) == 0
    assert hildenpy.permutation_image("2 1 -3 -2", 4) == [2, 3, 0, 1]
    assert hildenpy.free_reduce("1 -1 2", 3) == "2"
    assert hildenpy.generator_word("t", 1, 2) == "1"


def test_verify_families():
    text, ok = hildenpy.verify_families(2)
    assert ok is True
    assert "SUMMARY" in text
    text4, ok4 = hildenpy.verify_families(4, "P9")
    assert ok4 is True
    assert "FAMILY P9 instances=3 pass=3 fail=0" in text4


def test_derivation_check_and_search():
    path = os.path.join(data_dir(), "derivations", "r1_4.drv")
    ok, text = hildenpy.check_derivation_file(path, 4)
    assert ok is True
    assert "claim:" in text

    status, derivation = hildenpy.search_derivation("t1 t2", "t2 t1", 4, 2)
    assert status == "found"
    assert "step 1:" in derivation


def test_face_reduction():
    out = hildenpy.reduce_face_class("R(2,3)")
    assert "basis:" in out
    assert "R(2,3) ->" in out


def test_presentation():
    path = os.path.join(data_dir(), "complexes", "triangle_s3.cx")
    text, order = hildenpy.presentation_from_file(path)
    assert order == 6
    assert "generators: w r1" in text
