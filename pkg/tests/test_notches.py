"""Notch discovery, closing, and the count invariants."""
import pytest

from rootcone import corpus
from rootcone.errors import NotANotch
from rootcone.notches import Notch, close_notch, close_notch_with_map, find_notches
from rootcone.posets import build_poset


def test_vee_notch():
    notches = find_notches(corpus.vee())
    assert notches == [Notch(1, 2, 3, "V")]
    closed = close_notch(corpus.vee(), notches[0])
    assert closed.n == 2 and closed.covers == ((1, 2),)


def test_wedge_notch():
    notches = find_notches(corpus.wedge())
    assert notches == [Notch(3, 1, 2, "A")]
    closed = close_notch(corpus.wedge(), notches[0])
    assert closed.covers == ((1, 2),)


def test_diamond_has_no_notch():
    # removing the down-set of 1 leaves 2-4-3 connected
    assert find_notches(corpus.diamond()) == []


def test_not_a_notch():
    with pytest.raises(NotANotch):
        close_notch(corpus.diamond(), Notch(1, 2, 3, "V"))


def test_close_notch_with_nonadjacent_merge_labels():
    # merging 2 and 5 forces a genuine relabeling: the cover (4, 5) turns
    # into a cover whose head, the kept element 2, is below its tail
    p = build_poset(5, [(1, 2), (1, 5), (3, 4), (4, 5)])
    notches = find_notches(p)
    target = [t for t in notches if (t.b, t.c) == (2, 5)]
    assert target, notches
    q, label = close_notch_with_map(p, target[0])
    assert q.n == 4
    assert len(q.covers) == len(p.covers) - 1
    assert sorted(label.values()) == [1, 2, 3, 4]


def test_close_notch_counts_over_corpus():
    for p in corpus.corpus_gen(seed=5, n_max=6, count=40):
        for t in find_notches(p):
            q = close_notch(p, t)
            assert q.n == p.n - 1
            assert len(q.covers) == len(p.covers) - 1


def test_notch_shapes_partition():
    # bowtie: 1,2 < 3 < 4,5 has a V-notch and an A-notch at the waist
    p = build_poset(5, [(1, 3), (2, 3), (3, 4), (3, 5)])
    notches = find_notches(p)
    assert Notch(3, 4, 5, "V") in notches
    assert Notch(3, 1, 2, "A") in notches
