"""The pairing map P_k : S^{2k} W -> S^k(S^2 W) and the ideal it generates.

Elements of S(S^2 W) are polynomials in commuting symbols L_ij = e_i e_j
(i <= j).  A monomial is a sorted tuple of index pairs.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .exalg import Multivector
from .linalg import EchelonBasis, matmul
from .spops import L, check_guard, letter_matrix

MAX_PAIRING_K = 6
MAX_AMBIENT = 20000


def enumerate_pairings(k):
    """All perfect matchings of positions 0..2k-1, (2k-1)!! of them."""
    if k < 1 or k > MAX_PAIRING_K:
        raise ValueError(f"k={k} outside 1..{MAX_PAIRING_K}")
    return list(_matchings(tuple(range(2 * k))))


def _matchings(items):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for idx, other in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _matchings(remaining):
            yield ((first, other),) + tail


def _sym(i, j):
    return (i, j) if i <= j else (j, i)


class SymPolyElement:
    """Rational polynomial in the commuting symbols L_ij."""

    def __init__(self, terms=None):
        self.terms = {}
        for mono, c in (terms or {}).items():
            if c:
                mono = tuple(sorted(_sym(*p) for p in mono))
                self.terms[mono] = self.terms.get(mono, 0) + Fraction(c)
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def symbol(cls, i, j):
        return cls({((i, j),): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SymPolyElement(out)

    def __mul__(self, other):
        if not isinstance(other, SymPolyElement):
            return SymPolyElement({m: c * Fraction(other) for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return SymPolyElement(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymPolyElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + "*".join(f"L{i}{j}" for i, j in m) if m else str(c)
                          for m, c in sorted(self.terms.items()))

    def coefficient_sum(self):
        return sum(self.terms.values())


def p_map(k, word, g=None):
    """P_k(e_{i_1}, ..., e_{i_2k}): sum over pairings of the products of L's."""
    word = tuple(word)
    if len(word) != 2 * k:
        raise ValueError(f"word of length {len(word)} given for k={k}")
    if g is not None and any(i < 1 or i > g for i in word):
        raise ValueError(f"indices of {word} outside 1..{g}")
    out = {}
    for pairing in enumerate_pairings(k):
        mono = tuple(sorted(_sym(word[a], word[b]) for a, b in pairing))
        out[mono] = out.get(mono, 0) + 1
    return SymPolyElement(out)


def words(g, length):
    """Monomials of S^length W as nondecreasing index tuples."""
    return list(combinations_with_replacement(range(1, g + 1), length))


def symbols(g):
    return [(i, j) for i in range(1, g + 1) for j in range(i, g + 1)]


def monomials(g, degree):
    return [tuple(m) for m in combinations_with_replacement(symbols(g), degree)]


def realize(poly, n, g, form=None, _cache=None):
    """Column-wise matrix on Lambda(V (x) W) of poly with L_ij -> the operator L_ij."""
    cache = {} if _cache is None else _cache
    total = {}
    for mono, c in poly.terms.items():
        m = None
        for (i, j) in mono:
            key = (i, j)
            if key not in cache:
                cache[key] = letter_matrix(L(i, j), n, g, form)
            m = cache[key] if m is None else matmul(cache[key], m)
        if m is None:
            m = {k: {k: 1} for k in range(1 << (2 * n * g))}
        for col, vals in m.items():
            acc = total.setdefault(col, {})
            for row, v in vals.items():
                s = acc.get(row, 0) + c * v
                if s:
                    acc[row] = s
                else:
                    acc.pop(row, None)
    return {k: v for k, v in total.items() if v}


def find_nonvanishing(n, g, k, form=None):
    """First (word, basis monomial, image) with P_k(word) acting nonzero, or None."""
    check_guard(n, g)
    cache = {}
    for w in words(g, 2 * k):
        mat = realize(p_map(k, w), n, g, form, cache)
        for col in sorted(mat):
            image = Multivector(n, g, mat[col])
            return w, Multivector(n, g, {col: 1}), image
    return None


def realize_and_check_annihilation(n, g, form=None):
    """True when every P_{n+1}(word) acts as exactly zero on Lambda(V (x) W)."""
    return find_nonvanishing(n, g, n + 1, form) is None


@dataclass
class GradedQuotientReport:
    n: int
    g: int
    rows: list  # (degree, ambient, rank, quotient)

    @property
    def quotient_dims(self):
        return {d: q for d, _, _, q in self.rows}

    @property
    def total(self):
        return sum(q for _, _, _, q in self.rows)

    def to_json(self):
        return [{"degree": d, "ambient": a, "rank": r, "quotient": q} for d, a, r, q in self.rows]

    def dumps(self):
        return json.dumps(self.to_json())


def quotient_graded_dims(n, g, max_degree):
    """Graded dims of S(S^2 W) modulo the ideal generated by P_{n+1}(S^{2n+2} W)."""
    k = n + 1
    gens = [p_map(k, w) for w in words(g, 2 * k)]
    rows = []
    for d in range(max_degree + 1):
        ambient = monomials(g, d)
        if len(ambient) > MAX_AMBIENT:
            raise ValueError(f"degree {d} has {len(ambient)} monomials, guard is {MAX_AMBIENT}")
        index = {m: i for i, m in enumerate(ambient)}
        basis = EchelonBasis()
        if d >= k:
            for m in monomials(g, d - k):
                mono = SymPolyElement({m: 1})
                for gen in gens:
                    rel = mono * gen
                    basis.add({index[x]: c for x, c in rel.terms.items()})
        rows.append((d, len(ambient), basis.rank, len(ambient) - basis.rank))
    return GradedQuotientReport(n, g, rows)
