from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from pizzagames import asc_holds, classify, partition_stack, partition_tes
from pizzagames.slices import SliceError, check_decomposition, compose_weights
from pizzagames import _kernel_py
from pizzagames.backend import kernel

weights = hst.lists(hst.integers(-5, 5), min_size=1, max_size=14)


def test_asc_examples():
    assert asc_holds((1, 2))  # 1-2 <= 0
    assert not asc_holds((2, 1))
    assert asc_holds((0, 1, 0, 2))


def test_classify_kinds():
    assert classify((4,)).kind == "slice"
    assert classify((4, 7, 5)).kind == "slice"
    assert classify((4, 7, 5)).weight == 2
    assert classify((1, 2)).kind == "ev_sequence"
    assert classify((1, 2)).weight == 1
    assert classify((2, 1)).kind == "neither"


def test_partition_tes_example():
    dec = partition_tes((4, 3, 1, 4, 7, 5))
    assert dec.weights == (4, 3, 1, 2)
    check_decomposition(dec)


def test_partition_stack_with_remainder():
    dec = partition_stack((3, 1, 2))
    check_decomposition(dec)
    assert dec.weights == (3,)
    assert dec.ev_x == 1


@settings(max_examples=300, deadline=None)
@given(weights)
def test_partitions_validate(a):
    check_decomposition(partition_tes(a))
    check_decomposition(partition_stack(a))


@settings(max_examples=200, deadline=None)
@given(hst.lists(hst.fractions(max_denominator=6), min_size=1, max_size=10))
def test_partitions_handle_rationals(a):
    check_decomposition(partition_tes(a))
    check_decomposition(partition_stack(a))


@settings(max_examples=300, deadline=None)
@given(weights)
def test_kernels_agree(a):
    assert kernel.tes_partition(a) == _kernel_py.tes_partition(a)
    assert kernel.stack_partition(a) == _kernel_py.stack_partition(a)


def test_compose_weights_refines():
    inner = partition_tes((4, 3, 1, 4, 7, 5))
    outer = partition_tes(inner.weights)
    merged = compose_weights(outer, inner)
    assert merged.weights == outer.weights
    check_decomposition(merged)


def test_compose_rejects_mismatch():
    inner = partition_tes((4, 3, 1, 2))
    outer = partition_tes((9, 9))
    with pytest.raises(SliceError):
        compose_weights(outer, inner)


def test_slice_weight_is_fraction():
    dec = partition_tes((Fraction(1, 2), Fraction(3, 2), Fraction(1, 2)))
    assert all(isinstance(w, Fraction) for w in dec.weights)
