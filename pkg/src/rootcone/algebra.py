"""Exact multivariate polynomials and structured rational functions.

Coefficients are arbitrary-precision integers.  A rational function is kept
as an integer polynomial numerator over a multiset of linear difference
factors (x_i - x_j) with i < j, together with a sign; no gcd or normal form
is ever computed.  Equality is decided exactly by clearing denominators,
optionally preceded by a seeded probabilistic rejection that can only ever
answer "different".
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache

from .errors import NotAForest, ParseError, PoleCreated
from .graphs import LabeledGraph

# Seed table for the probabilistic equality pre-filter.  Fixed so runs are
# reproducible; the filter is never authoritative for "equal".
EQUALITY_FILTER_SEED = 0x5EED
EQUALITY_FILTER_POINTS = 3

Expvec = tuple[int, ...]
Factor = tuple[int, int]

# Exponent vectors are packed into a single integer, one field per variable,
# so that monomial multiplication is integer addition.  Every polynomial the
# package forms has per-variable exponents far below this field width.
_BITS = 24
_MASK = (1 << _BITS) - 1


def _pack(exps) -> int:
    key = 0
    for k, e in enumerate(exps):
        key |= e << (_BITS * k)
    return key


def _unpack(key: int, nvars: int) -> Expvec:
    return tuple((key >> (_BITS * k)) & _MASK for k in range(nvars))


class Polynomial:
    """Sparse integer polynomial: packed exponent key -> nonzero coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[int, int] | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c: int):
        return cls(nvars, {0: c} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, i: int):
        """x_i (1-based)."""
        return cls(nvars, {1 << (_BITS * (i - 1)): 1})

    @classmethod
    def monomial(cls, nvars, exps: Expvec, coeff: int = 1):
        if coeff == 0:
            return cls(nvars)
        return cls(nvars, {_pack(exps): coeff})

    @classmethod
    def linear_difference(cls, nvars, i: int, j: int):
        """x_i - x_j."""
        return cls(nvars, {1 << (_BITS * (i - 1)): 1, 1 << (_BITS * (j - 1)): -1})

    def monomials(self) -> dict[Expvec, int]:
        """Exponent-tuple view of the terms."""
        return {_unpack(k, self.nvars): c for k, c in self.terms.items()}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Polynomial(self.nvars, out)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial(self.nvars)
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(_unpack(e, self.nvars)) for e in self.terms), default=0)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for k, p in zip(_unpack(e, self.nvars), point):
                if k:
                    v *= Fraction(p) ** k
            total += v
        return total

    def substitute_var(self, b: int, c: int) -> "Polynomial":
        """Replace x_b by x_c everywhere."""
        sb, sc = _BITS * (b - 1), _BITS * (c - 1)
        out: dict[int, int] = {}
        for e, coeff in self.terms.items():
            eb = (e >> sb) & _MASK
            if eb:
                e = e - (eb << sb) + (eb << sc)
            s = out.get(e, 0) + coeff
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Polynomial(self.nvars, out)

    def rename(self, mapping: dict[int, int], new_nvars: int) -> "Polynomial":
        """Relabel variables; every variable actually present must be mapped."""
        out: dict[int, int] = {}
        for e, coeff in self.terms.items():
            exps = _unpack(e, self.nvars)
            e2 = [0] * new_nvars
            for v0, k in enumerate(exps):
                if k:
                    v = v0 + 1
                    if v not in mapping:
                        raise ValueError(f"variable x{v} present but not renamed")
                    e2[mapping[v] - 1] = k
            out[_pack(e2)] = coeff
        return Polynomial(new_nvars, out)

    def divide_exact_monomial(self, exps: Expvec) -> "Polynomial":
        m = _pack(exps)
        out = {}
        for e, c in self.terms.items():
            if any(a < b for a, b in zip(_unpack(e, self.nvars), exps)):
                raise ValueError("monomial division is not exact")
            out[e - m] = c
        return Polynomial(self.nvars, out)

    def div_exact_linear(self, i: int, j: int) -> "Polynomial | None":
        """Exact quotient by (x_i - x_j), or None if the division has a remainder.

        Horner division in x_i, with multiplication by x_j standing in for the
        root.  Exactness holds iff the final fold leaves nothing behind.
        """
        if not self.terms:
            return Polynomial(self.nvars)
        si, sj = _BITS * (i - 1), _BITS * (j - 1)
        by_deg: dict[int, dict[int, int]] = {}
        for e, c in self.terms.items():
            k = (e >> si) & _MASK
            by_deg.setdefault(k, {})[e - (k << si)] = c
        d = max(by_deg)
        if d == 0:
            return None

        def acc(dst: dict[int, int], src: dict[int, int]):
            for e, c in src.items():
                s = dst.get(e, 0) + c
                if s:
                    dst[e] = s
                elif e in dst:
                    del dst[e]

        quot: dict[int, int] = {}
        b = dict(by_deg[d])
        for k in range(d - 1, -1, -1):
            for e, c in b.items():
                quot[e + (k << si)] = c
            nxt = {e + (1 << sj): c for e, c in b.items()}
            acc(nxt, by_deg.get(k, {}))
            b = nxt
        if b:
            return None
        return Polynomial(self.nvars, quot)

    def sorted_terms(self) -> list[tuple[Expvec, int]]:
        """Graded-lex descending: higher total degree first, then lex on exponents."""
        items = [(_unpack(e, self.nvars), c) for e, c in self.terms.items()]
        items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
        return items

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for v0, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{v0 + 1}")
                elif k > 1:
                    factors.append(f"x{v0 + 1}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        s = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.text()})"


def _canonical_factor(a: int, b: int) -> tuple[Factor, int]:
    """Orient (x_a - x_b) as a stored factor (i, j), returning the sign flip."""
    if a == b:
        raise ValueError("zero factor (x_a - x_a)")
    return ((a, b), 1) if a < b else ((b, a), -1)


@lru_cache(maxsize=4096)
def _expand_factors(nvars: int, items: tuple[tuple[Factor, int], ...]) -> Polynomial:
    """Expand prod (x_i - x_j)^m to a Polynomial (cached; factor sets repeat a lot)."""
    out = Polynomial.one(nvars)
    for (i, j), m in items:
        lin = Polynomial.linear_difference(nvars, i, j)
        for _ in range(m):
            out = out * lin
    return out


class RatFrac:
    """sign * num / prod (x_i - x_j)^mult with canonically oriented factors.

    Zero is num == 0 with an empty denominator.  Structural identity of two
    RatFrac objects says nothing about mathematical equality; use frac_equal.
    """

    __slots__ = ("nvars", "num", "den", "sign")

    def __init__(self, nvars: int, num: Polynomial, den: dict[Factor, int], sign: int = 1):
        assert sign in (1, -1)
        assert num.nvars == nvars
        if num.is_zero():
            den = {}
            sign = 1
        self.nvars = nvars
        self.num = num
        self.den = {f: m for f, m in den.items() if m}
        self.sign = sign

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, Polynomial.zero(nvars), {})

    @classmethod
    def one(cls, nvars):
        return cls(nvars, Polynomial.one(nvars), {})

    @classmethod
    def from_factors(cls, nvars, factors, num: Polynomial | None = None, sign: int = 1):
        """Build sign * num / prod (x_a - x_b) over possibly unoriented pairs."""
        den: dict[Factor, int] = {}
        for a, b in factors:
            f, s = _canonical_factor(a, b)
            sign *= s
            den[f] = den.get(f, 0) + 1
        if num is None:
            num = Polynomial.one(nvars)
        return cls(nvars, num, den, sign)

    def den_items(self) -> tuple[tuple[Factor, int], ...]:
        return tuple(sorted(self.den.items()))

    def den_polynomial(self) -> Polynomial:
        return _expand_factors(self.nvars, self.den_items())

    def signed_num(self) -> Polynomial:
        return self.num if self.sign == 1 else -self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"RatFrac({canonical_text(self)})"


def _lcm_den(a: dict[Factor, int], b: dict[Factor, int]) -> dict[Factor, int]:
    out = dict(a)
    for f, m in b.items():
        if out.get(f, 0) < m:
            out[f] = m
    return out


def _den_diff(lcm: dict[Factor, int], den: dict[Factor, int]) -> tuple:
    return tuple(sorted((f, m - den.get(f, 0)) for f, m in lcm.items() if m - den.get(f, 0)))


def frac_combine(op: str, a: RatFrac, b: RatFrac | None = None) -> RatFrac:
    """Field operations: op in {add, sub, mul, neg}.

    Addition clears to the least common multiple of the factor multisets, so
    the result's denominator never grows beyond what the inputs carry.
    """
    if op == "neg":
        return RatFrac(a.nvars, a.num, a.den, -a.sign)
    assert b is not None
    if a.nvars != b.nvars:
        raise ValueError("fractions over different variable universes")
    n = a.nvars
    if op == "mul":
        if a.is_zero() or b.is_zero():
            return RatFrac.zero(n)
        den = dict(a.den)
        for f, m in b.den.items():
            den[f] = den.get(f, 0) + m
        return RatFrac(n, a.num * b.num, den, a.sign * b.sign)
    if op == "sub":
        return frac_combine("add", a, frac_combine("neg", b))
    if op != "add":
        raise ValueError(f"unknown op {op!r}")
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    lcm = _lcm_den(a.den, b.den)
    na = a.signed_num() * _expand_factors(n, _den_diff(lcm, a.den))
    nb = b.signed_num() * _expand_factors(n, _den_diff(lcm, b.den))
    num = na + nb
    if num.is_zero():
        return RatFrac.zero(n)
    return RatFrac(n, num, lcm, 1)


def frac_sum(fracs) -> RatFrac:
    """Sum a sequence of fractions by balanced merging.

    Fractions with identical denominators are added first (a plain
    numerator addition); the survivors are merged pairwise in sorted
    denominator order so neighbours share factors and cofactors stay small.
    """
    items = list(fracs)
    if not items:
        raise ValueError("cannot sum an empty sequence without a variable count")
    groups: dict[tuple, RatFrac] = {}
    for f in items:
        key = f.den_items()
        prev = groups.get(key)
        if prev is None:
            groups[key] = f
        else:
            num = prev.signed_num() + f.signed_num()
            groups[key] = (
                RatFrac.zero(f.nvars)
                if num.is_zero()
                else RatFrac(f.nvars, num, dict(key), 1)
            )
    items = [groups[k] for k in sorted(groups)]
    while len(items) > 1:
        nxt = []
        for k in range(0, len(items) - 1, 2):
            nxt.append(frac_combine("add", items[k], items[k + 1]))
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def evaluate_frac(f: RatFrac, point) -> Fraction:
    """Exact rational value at `point`; raises ZeroDivisionError on a pole."""
    den = Fraction(1)
    for (i, j), m in f.den.items():
        d = Fraction(point[i - 1]) - Fraction(point[j - 1])
        if d == 0:
            raise ZeroDivisionError(f"factor (x{i} - x{j}) vanishes at sample point")
        den *= d**m
    return f.sign * f.num.evaluate(point) / den


def _sample_points(nvars: int, count: int):
    rng = random.Random(EQUALITY_FILTER_SEED)
    pts = []
    for _ in range(count):
        pts.append(tuple(rng.sample(range(1, 10**6), nvars)))
    return pts


def frac_equal(a: RatFrac, b: RatFrac) -> bool:
    """Exact equality by clearing to a common denominator.

    A seeded evaluation pre-filter at integer points with distinct
    coordinates (so no linear difference factor vanishes) rejects cheaply;
    "equal" is only ever decided by the exact comparison.
    """
    if a.nvars != b.nvars:
        raise ValueError("fractions over different variable universes")
    n = a.nvars
    for pt in _sample_points(n, EQUALITY_FILTER_POINTS):
        if evaluate_frac(a, pt) != evaluate_frac(b, pt):
            return False
    lcm = _lcm_den(a.den, b.den)
    na = a.signed_num() * _expand_factors(n, _den_diff(lcm, a.den))
    nb = b.signed_num() * _expand_factors(n, _den_diff(lcm, b.den))
    return na == nb


def substitute(f: RatFrac, b: int, c: int) -> RatFrac:
    """Replace x_b by x_c; raises PoleCreated if a denominator factor collapses."""
    if b == c:
        return f
    den: dict[Factor, int] = {}
    sign = f.sign
    for (i, j), m in f.den.items():
        i2 = c if i == b else i
        j2 = c if j == b else j
        if i2 == j2:
            raise PoleCreated(f"substitution x{b} := x{c} zeroes (x{i} - x{j})")
        fct, s = _canonical_factor(i2, j2)
        sign *= s**m
        den[fct] = den.get(fct, 0) + m
    return RatFrac(f.nvars, f.num.substitute_var(b, c), den, sign)


def substitute_with_cancellation(f: RatFrac, b: int, c: int) -> RatFrac:
    """Like substitute, but first cancels removable copies of (x_b - x_c).

    Denominator factors that would collapse are divided out of the numerator
    exactly; only a genuine pole raises PoleCreated.
    """
    if b == c:
        return f
    fct, _ = _canonical_factor(b, c)
    mult = f.den.get(fct, 0)
    if mult:
        num = f.num
        for _ in range(mult):
            q = num.div_exact_linear(*fct)
            if q is None:
                raise PoleCreated(
                    f"substitution x{b} := x{c} creates a genuine pole"
                )
            num = q
        den = dict(f.den)
        del den[fct]
        f = RatFrac(f.nvars, num, den, f.sign)
    return substitute(f, b, c)


def rename_frac(f: RatFrac, mapping: dict[int, int], new_nvars: int) -> RatFrac:
    """Relabel variables by `mapping`; factor orientation flips fold into the sign."""
    num = f.num.rename(mapping, new_nvars)
    den: dict[Factor, int] = {}
    sign = f.sign
    for (i, j), m in f.den.items():
        fct, s = _canonical_factor(mapping[i], mapping[j])
        sign *= s**m
        den[fct] = den.get(fct, 0) + m
    return RatFrac(new_nvars, num, den, sign)


def frac_mul_poly(f: RatFrac, p: Polynomial) -> RatFrac:
    return RatFrac(f.nvars, f.num * p, f.den, f.sign)


def canonical_text(f: RatFrac) -> str:
    """Deterministic rendering that round-trips through parse_fraction."""
    if f.is_zero():
        return "0"
    num = f.signed_num()
    num_text = num.text()
    if not f.den:
        return num_text
    if len(num.terms) > 1:
        num_text = f"({num_text})"
    parts = []
    for (i, j), m in sorted(f.den.items()):
        s = f"(x{i} - x{j})"
        if m > 1:
            s += f"^{m}"
        parts.append(s)
    return f"{num_text} / ({'*'.join(parts)})"


_FACTOR_RE = re.compile(r"^\(\s*x(\d+)\s*-\s*x(\d+)\s*\)(?:\^(\d+))?$")
_ATOM_RE = re.compile(r"^(?:(\d+)|x(\d+)(?:\^(\d+))?)$")


def _split_top(text: str, sep: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _strip_outer_parens(text: str) -> str:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        return text
    depth = 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and k != len(text) - 1:
                return text
    return text[1:-1].strip()


def _parse_poly(text: str, nvars: int) -> Polynomial:
    text = _strip_outer_parens(text)
    if not text:
        raise ParseError("empty polynomial")
    # normalise to explicit leading sign, then walk signed chunks
    s = text.replace(" ", "")
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]+", s)
    if "".join(chunks) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    poly = Polynomial.zero(nvars)
    for chunk in chunks:
        sign = 1 if chunk[0] == "+" else -1
        coeff = 1
        exps = [0] * nvars
        for atom in chunk[1:].split("*"):
            m = _ATOM_RE.match(atom)
            if not m:
                raise ParseError(f"bad term {atom!r} in polynomial {text!r}")
            if m.group(1) is not None:
                coeff *= int(m.group(1))
            else:
                v = int(m.group(2))
                if not (1 <= v <= nvars):
                    raise ParseError(f"variable x{v} outside universe of {nvars}")
                exps[v - 1] += int(m.group(3) or 1)
        poly = poly + Polynomial.monomial(nvars, tuple(exps), sign * coeff)
    return poly


def _max_var(text: str) -> int:
    return max((int(m) for m in re.findall(r"x(\d+)", text)), default=1)


def parse_fraction(text: str, nvars: int | None = None) -> RatFrac:
    """Parse the canonical fraction grammar emitted by canonical_text."""
    text = text.strip()
    if nvars is None:
        nvars = _max_var(text)
    pieces = _split_top(text, "/")
    if len(pieces) == 1:
        num = _parse_poly(pieces[0], nvars)
        return RatFrac(nvars, num, {})
    if len(pieces) != 2:
        raise ParseError("more than one top-level '/'")
    num = _parse_poly(pieces[0], nvars)
    den_text = _strip_outer_parens(pieces[1])
    den: dict[Factor, int] = {}
    sign = 1
    for part in _split_top(den_text, "*"):
        part = part.strip()
        m = _FACTOR_RE.match(part)
        if not m:
            raise ParseError(f"bad denominator factor {part!r}")
        i, j = int(m.group(1)), int(m.group(2))
        mult = int(m.group(3) or 1)
        fct, s = _canonical_factor(i, j)
        sign *= s**mult
        den[fct] = den.get(fct, 0) + mult
    return RatFrac(nvars, num, den, sign)


def tree_psi_frac(t: LabeledGraph) -> RatFrac:
    """1 / prod over edges (i, j) of (x_i - x_j); requires a forest."""
    if not t.is_forest():
        raise NotAForest("graph has an undirected cycle")
    return RatFrac.from_factors(t.n, t.edges)


def ipt_frac(t: LabeledGraph) -> RatFrac:
    """Integer point transform of a unimodular forest cone.

    The product over edges (i, j) of 1/(1 - x_i/x_j) cleared to ordinary
    form: monomial numerator prod x_j over denominator factors (x_j - x_i).
    """
    if not t.is_forest():
        raise NotAForest("graph has an undirected cycle")
    exps = [0] * t.n
    for _, j in t.edges:
        exps[j - 1] += 1
    num = Polynomial.monomial(t.n, tuple(exps))
    sign = -1 if len(t.edges) % 2 else 1
    return RatFrac(t.n, num, {e: 1 for e in t.edges}, sign)
