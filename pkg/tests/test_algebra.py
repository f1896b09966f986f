"""Exact polynomial and fraction arithmetic."""
from fractions import Fraction

import pytest

from rootcone.algebra import (
    Polynomial,
    RatFrac,
    canonical_text,
    evaluate_frac,
    frac_combine,
    frac_equal,
    frac_sum,
    ipt_frac,
    parse_fraction,
    rename_frac,
    substitute,
    substitute_with_cancellation,
    tree_psi_frac,
)
from rootcone.errors import NotAForest, ParseError, PoleCreated
from rootcone.graphs import labeled_graph


def frac(text, nvars):
    return parse_fraction(text, nvars)


def test_polynomial_ring_basics():
    x1 = Polynomial.variable(3, 1)
    x2 = Polynomial.variable(3, 2)
    p = (x1 - x2) * (x1 + x2)
    assert p == x1 * x1 - x2 * x2
    assert p.evaluate((3, 2, 1)) == 5
    assert (p - p).is_zero()
    assert (p * 0).is_zero()
    assert Polynomial.one(3).degree() == 0
    assert p.degree() == 2


def test_polynomial_text_graded_lex():
    x1 = Polynomial.variable(4, 1)
    x4 = Polynomial.variable(4, 4)
    assert (x1 - x4).text() == "x1 - x4"
    p = x1 * x1 * x4 - 2 * x4 + Polynomial.constant(4, 5)
    assert p.text() == "x1^2*x4 - 2*x4 + 5"


def test_div_exact_linear():
    n = 3
    x1, x2, x3 = (Polynomial.variable(n, i) for i in (1, 2, 3))
    p = (x1 - x2) * (x1 - x2) * (x2 - x3)
    q = p.div_exact_linear(1, 2)
    assert q == (x1 - x2) * (x2 - x3)
    assert ((x1 - x3) * (x2 - x3)).div_exact_linear(1, 2) is None


def test_frac_combine_additive_inverse():
    a = frac("1 / ((x1 - x2))", 2)
    b = frac_combine("neg", a)
    assert frac_combine("add", a, b).is_zero()
    assert canonical_text(frac_combine("add", a, b)) == "0"


def test_frac_combine_partial_fraction_identity():
    # 1/((x1-x2)(x1-x3)) + 1/((x1-x3)(x2-x3)) == 1/((x1-x2)(x2-x3))
    a = frac("1 / ((x1 - x2)*(x1 - x3))", 3)
    b = frac("1 / ((x1 - x3)*(x2 - x3))", 3)
    s = frac_combine("add", a, b)
    assert frac_equal(s, frac("1 / ((x1 - x2)*(x2 - x3))", 3))
    # denominator never grows beyond the inputs' factors
    assert set(s.den) <= set(a.den) | set(b.den)


def test_frac_combine_mul_identity():
    a = frac("(x1 - x4) / ((x1 - x2)*(x2 - x4))", 4)
    one = RatFrac.one(4)
    prod = frac_combine("mul", a, one)
    assert frac_equal(prod, a)


def test_frac_equal_diamond_closed_form():
    lhs = frac_combine(
        "add",
        frac("1 / ((x1 - x2)*(x2 - x3)*(x3 - x4))", 4),
        frac("1 / ((x1 - x3)*(x3 - x2)*(x2 - x4))", 4),
    )
    rhs = frac("(x1 - x4) / ((x1 - x2)*(x1 - x3)*(x2 - x4)*(x3 - x4))", 4)
    assert frac_equal(lhs, rhs)
    assert evaluate_frac(lhs, (1, 2, 3, 5)) == Fraction(-1, 3)
    assert evaluate_frac(rhs, (1, 2, 3, 5)) == Fraction(-1, 3)


def test_frac_equal_reflexive_and_negative():
    a = frac("1 / ((x1 - x2))", 3)
    assert frac_equal(a, a)
    assert not frac_equal(a, frac("1 / ((x1 - x3))", 3))


def test_frac_equal_is_equivalence_on_samples():
    fs = [
        frac("1 / ((x1 - x2)*(x2 - x3))", 3),
        frac_combine(
            "add",
            frac("1 / ((x1 - x2)*(x1 - x3))", 3),
            frac("1 / ((x1 - x3)*(x2 - x3))", 3),
        ),
        frac("(x1 - x3) / ((x1 - x2)*(x1 - x3)*(x2 - x3))", 3),
        frac("1 / ((x1 - x3)*(x2 - x3))", 3),
    ]
    for a in fs:
        assert frac_equal(a, a)
        for b in fs:
            assert frac_equal(a, b) == frac_equal(b, a)
            for c in fs:
                if frac_equal(a, b) and frac_equal(b, c):
                    assert frac_equal(a, c)


def test_evaluation_homomorphism():
    a = frac("(x1 - x3) / ((x1 - x2)*(x2 - x3))", 3)
    b = frac("x2 / ((x1 - x3))", 3)
    pts = [(1, 5, 11), (2, 9, 4), (7, 3, 2), (10, 6, 1), (8, 2, 13)]
    for pt in pts:
        s = frac_combine("add", a, b)
        m = frac_combine("mul", a, b)
        assert evaluate_frac(s, pt) == evaluate_frac(a, pt) + evaluate_frac(b, pt)
        assert evaluate_frac(m, pt) == evaluate_frac(a, pt) * evaluate_frac(b, pt)


def test_tree_psi_frac():
    chain = labeled_graph(3, [(1, 2), (2, 3)])
    assert canonical_text(tree_psi_frac(chain)) == "1 / ((x1 - x2)*(x2 - x3))"
    single = labeled_graph(2, [(1, 2)])
    assert canonical_text(tree_psi_frac(single)) == "1 / ((x1 - x2))"
    tree = labeled_graph(4, [(1, 2), (1, 3), (2, 4)])
    assert canonical_text(tree_psi_frac(tree)) == "1 / ((x1 - x2)*(x1 - x3)*(x2 - x4))"
    with pytest.raises(NotAForest):
        tree_psi_frac(labeled_graph(3, [(1, 2), (2, 3), (1, 3)]))


def test_ipt_frac():
    single = labeled_graph(2, [(1, 2)])
    f = ipt_frac(single)
    # x2/(x2 - x1): at (1, 2) the value is 2
    assert evaluate_frac(f, (1, 2)) == 2
    chain = labeled_graph(3, [(1, 2), (2, 3)])
    g = ipt_frac(chain)
    assert evaluate_frac(g, (1, 2, 4)) == Fraction(2 * 4, (2 - 1) * (4 - 2))
    tree = labeled_graph(4, [(1, 2), (2, 4), (3, 4)])
    assert evaluate_frac(ipt_frac(tree), (1, 2, 3, 5)) == Fraction(25, 3)
    with pytest.raises(NotAForest):
        ipt_frac(labeled_graph(3, [(1, 2), (2, 3), (1, 3)]))


def test_ipt_times_complement_is_one():
    tree = labeled_graph(4, [(1, 2), (2, 4), (3, 4)])
    f = ipt_frac(tree)
    for pt in [(1, 2, 3, 5), (2, 3, 5, 7), (1, 4, 9, 16)]:
        prod = evaluate_frac(f, pt)
        for i, j in tree.edges:
            prod *= 1 - Fraction(pt[i - 1], pt[j - 1])
        assert prod == 1


def test_substitute():
    a = frac("1 / ((x1 - x2)*(x1 - x3))", 3)
    b = substitute(a, 3, 2)
    assert canonical_text(b) == "1 / ((x1 - x2)^2)"
    c = frac("x3 / ((x1 - x2))", 3)
    assert substitute(c, 3, 3) is c
    untouched = substitute(a, 3, 3)
    assert untouched is a
    with pytest.raises(PoleCreated):
        substitute(frac("1 / ((x2 - x3))", 3), 3, 2)


def test_substitute_with_cancellation():
    # (x2 - x3)/((x1 - x2)(x1 - x3)(x2 - x3)) has a removable factor
    f = frac("(x2 - x3) / ((x1 - x2)*(x1 - x3)*(x2 - x3))", 3)
    g = substitute_with_cancellation(f, 3, 2)
    assert canonical_text(g) == "1 / ((x1 - x2)^2)"
    with pytest.raises(PoleCreated):
        substitute_with_cancellation(frac("x1 / ((x2 - x3))", 3), 3, 2)


def test_rename_frac():
    f = frac("x3 / ((x1 - x3))", 3)
    g = rename_frac(f, {1: 2, 3: 1}, 2)
    assert canonical_text(g) == "-x1 / ((x1 - x2))"


def test_canonical_text_round_trip():
    texts = [
        "0",
        "1 / ((x1 - x2))",
        "(x1 - x4) / ((x1 - x2)*(x1 - x3)*(x2 - x4)*(x3 - x4))",
        "-x2 / ((x1 - x2)^2)",
        "x1^2*x2 - 2*x3 + 5",
        "(2*x1*x2 - 3) / ((x1 - x3)^2*(x2 - x3))",
    ]
    for t in texts:
        f = parse_fraction(t, 4)
        assert canonical_text(f) == t


def test_parse_fraction_rejects_garbage():
    with pytest.raises(ParseError):
        parse_fraction("1 / ((x1 + x2))", 2)
    with pytest.raises(ParseError):
        parse_fraction("", 2)
    with pytest.raises(ParseError):
        parse_fraction("x9 / ((x1 - x2))", 2)


def test_frac_sum_matches_sequential_adds():
    parts = [
        frac("1 / ((x1 - x2)*(x2 - x3))", 3),
        frac("1 / ((x1 - x3)*(x2 - x3))", 3),
        frac("x2 / ((x1 - x2))", 3),
        frac("1 / ((x1 - x2)*(x2 - x3))", 3),
    ]
    total = frac_sum(parts)
    seq = parts[0]
    for f in parts[1:]:
        seq = frac_combine("add", seq, f)
    assert frac_equal(total, seq)
