"""Poset construction, linear extensions, closure and goodification."""
import pytest

from rootcone import corpus
from rootcone.errors import CycleDetected, NotNaturallyLabeled, RedundantCover
from rootcone.graphs import goodify, labeled_graph, transitive_closure
from rootcone.posets import (
    build_poset,
    count_extensions_bruteforce,
    linear_extensions,
)


def test_build_poset_accepts_diamond():
    p = build_poset(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    assert p.covers == ((1, 2), (1, 3), (2, 4), (3, 4))


def test_build_poset_rejections():
    with pytest.raises(NotNaturallyLabeled):
        build_poset(2, [(2, 1)])
    with pytest.raises(RedundantCover):
        build_poset(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(CycleDetected):
        build_poset(2, [(1, 1)])
    with pytest.raises(ValueError):
        build_poset(2, [(1, 5)])


def test_linear_extensions_chain_and_diamond():
    assert linear_extensions(corpus.chain(3)) == [(1, 2, 3)]
    assert linear_extensions(corpus.diamond()) == [(1, 2, 3, 4), (1, 3, 2, 4)]
    assert linear_extensions(corpus.antichain(2)) == [(1, 2), (2, 1)]


def test_linear_extensions_sorted():
    p = corpus.crown22()
    exts = linear_extensions(p)
    assert exts == sorted(exts)


def test_extension_counts_against_bruteforce():
    # independent oracle: filter all n! permutations by the order relation
    for p in corpus.corpus_gen(seed=7, n_max=6, count=25):
        assert len(linear_extensions(p)) == count_extensions_bruteforce(p)


def test_transitive_closure():
    chain = labeled_graph(3, [(1, 2), (2, 3)])
    assert transitive_closure(chain).edges == ((1, 2), (1, 3), (2, 3))
    diamond = corpus.diamond().hasse_graph()
    assert (1, 4) in transitive_closure(diamond).edges
    flat = labeled_graph(3, [(1, 3), (2, 3)])
    assert transitive_closure(flat).edges == flat.edges


def test_transitive_closure_idempotent():
    for p in corpus.corpus_gen(seed=3, n_max=6, count=20):
        g = p.hasse_graph()
        c = transitive_closure(g)
        assert transitive_closure(c) == c


def test_goodify():
    g = labeled_graph(3, [(1, 2), (2, 3), (1, 3)])
    good, removed = goodify(g)
    assert good.edges == ((1, 2), (2, 3))
    assert removed == ((1, 3),)

    closure = labeled_graph(4, [(1, 2), (1, 3), (2, 4), (3, 4), (1, 4)])
    good, removed = goodify(closure)
    assert removed == ((1, 4),)

    already_good = corpus.diamond().hasse_graph()
    same, removed = goodify(already_good)
    assert same == already_good and removed == ()


def test_goodify_merges_parallel_edges_silently():
    g = labeled_graph(3, [(1, 2), (1, 2), (2, 3)])
    good, removed = goodify(g)
    assert good.edges == ((1, 2), (2, 3))
    assert removed == ()


def test_goodify_closure_identity():
    # goodify . closure . goodify == goodify on transitive closures
    for p in corpus.corpus_gen(seed=11, n_max=6, count=20):
        c = transitive_closure(p.hasse_graph())
        g1, _ = goodify(c)
        g2, _ = goodify(transitive_closure(g1))
        assert g1 == g2


def test_graph_flags():
    alt = labeled_graph(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    assert alt.is_alternating()
    assert not alt.is_forest()
    path = labeled_graph(3, [(1, 2), (2, 3)])
    assert not path.is_alternating()
    assert path.is_forest() and path.is_connected()
    assert not labeled_graph(3, [(1, 2)]).is_connected()
