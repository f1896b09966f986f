"""Skew diagrams, their posets, and lattice paths."""
import math

import pytest

from rootcone import corpus
from rootcone.errors import EmptyDiagram
from rootcone.skew import build_skew, lattice_paths, skew_to_poset


def test_full_rectangle_poset():
    d = build_skew(2, 2, [(1, 2), (1, 2)])
    p, order = skew_to_poset(d)
    assert p.covers == ((1, 3), (1, 4), (2, 3), (2, 4))
    assert order == (1, 2, 3, 4)


def test_single_row_star():
    d = build_skew(1, 3, [(1, 3)])
    p, _ = skew_to_poset(d)
    assert p.covers == ((1, 2), (1, 3), (1, 4))


def test_two_row_staircase():
    d = build_skew(2, 2, [(1, 1), (1, 2)])
    p, _ = skew_to_poset(d)
    # x_1 = label 2 sees y_1 only; x_2 = label 1 sees y_1, y_2
    assert p.covers == ((1, 3), (1, 4), (2, 3))


def test_build_skew_validation():
    with pytest.raises(EmptyDiagram):
        build_skew(0, 2, [])
    with pytest.raises(ValueError):
        build_skew(2, 2, [(2, 2), (1, 2)])  # a not nondecreasing
    with pytest.raises(ValueError):
        build_skew(2, 3, [(1, 1), (3, 3)])  # column 2 uncovered
    with pytest.raises(ValueError):
        build_skew(1, 2, [(2, 2)])  # column 1 uncovered


def test_lattice_paths_2x2():
    d = build_skew(2, 2, [(1, 2), (1, 2)])
    assert lattice_paths(d) == [
        ((1, 1), (1, 2), (2, 2)),
        ((1, 1), (2, 1), (2, 2)),
    ]


def test_lattice_paths_single_row():
    d = build_skew(1, 4, [(1, 4)])
    assert lattice_paths(d) == [(((1, 1)), (1, 2), (1, 3), (1, 4))]


def test_rectangle_path_counts_are_binomial():
    for r in range(1, 5):
        for c in range(1, 5):
            d = build_skew(r, c, [(1, c)] * r)
            assert len(lattice_paths(d)) == math.comb(r + c - 2, r - 1)


def test_disconnected_diagram_has_no_paths():
    d = build_skew(2, 2, [(1, 1), (2, 2)])
    assert lattice_paths(d) == []
