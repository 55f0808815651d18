"""Pluri-Hodge numbers of a K3 surface and torus traces on cohomology.

On a K3 surface every Omega^{p_1} (x) ... (x) Omega^{p_g} has dimensions that
depend only on how many p_i equal 1: the SU(2) holonomy reduces H^0 to
invariants of the m-th tensor power of C^2, and Riemann-Roch fixes the rest.
"""

from fractions import Fraction
from itertools import product
from math import comb

from .reps import HodgeTable

MAX_K3_G = 6


class K3Profile(tuple):
    """Multidegree with entries in {0, 1, 2}; ``m`` counts the ones."""

    def __new__(cls, entries):
        entries = tuple(int(x) for x in entries)
        if any(x not in (0, 1, 2) for x in entries):
            raise ValueError(f"K3 profile entries must be 0, 1 or 2, got {entries}")
        return super().__new__(cls, entries)

    @property
    def m(self):
        return sum(1 for x in self if x == 1)


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def su2_invariant_dim(m):
    """dim of SU(2)-invariants in (C^2)^{(x) m}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m % 2:
        return 0
    k = m // 2
    # weight-0 multiplicity minus weight-2 multiplicity
    return comb(2 * k, k) - (comb(2 * k, k - 1) if k else 0)


def k3_pluri_hodge(profile, q):
    m = K3Profile(profile).m
    if q not in (0, 1, 2):
        return 0
    # h^0 - h^1 + h^2 = 2^{m+1}(1 - 6m) and h^0 = h^2 = SU(2)-invariants
    c = su2_invariant_dim(m)
    if q == 1:
        return 2 * c + 2 ** (m + 1) * (6 * m - 1)
    return c


def build_k3_table(g):
    if g < 1 or g > MAX_K3_G:
        raise ValueError(f"g={g} outside 1..{MAX_K3_G}")
    entries = {}
    for p in product((0, 1, 2), repeat=g):
        for q in (0, 1, 2):
            entries[(p, q)] = k3_pluri_hodge(p, q)
    return HodgeTable(1, g, entries)


class LaurentPoly:
    """Laurent polynomial in y_1..y_g: integer exponent tuples to Fractions."""

    def __init__(self, g, terms=None):
        self.g = g
        out = {}
        for e, c in (terms or {}).items():
            out[tuple(e)] = out.get(tuple(e), 0) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and (self.g, self.terms) == (other.g, other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.g, out)

    def __mul__(self, scalar):
        return LaurentPoly(self.g, {e: c * scalar for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-1) * other

    def shift(self, exps):
        """Multiply by the monomial prod y_i^exps_i."""
        return LaurentPoly(self.g, {tuple(a + b for a, b in zip(e, exps)): c
                                    for e, c in self.terms.items()})

    def invert_variable(self, i):
        """Substitute y_i -> 1/y_i (0-based i)."""
        return LaurentPoly(self.g, {e[:i] + (-e[i],) + e[i + 1:]: c for e, c in self.terms.items()})

    def evaluate(self, values):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + "*".join(f"y{j + 1}^{k}" for j, k in enumerate(e) if k)
                          if any(e) else str(c) for e, c in sorted(self.terms.items()))


class TorusElement:
    """Diagonal element diag(y_1, ..., y_g, 1/y_1, ..., 1/y_g) of Sp(g).

    ``eigenvalues=None`` keeps y_i formal; otherwise traces are specialized
    to the given nonzero rationals.
    """

    def __init__(self, g, eigenvalues=None):
        self.g = g
        if eigenvalues is not None:
            eigenvalues = tuple(Fraction(y) for y in eigenvalues)
            if len(eigenvalues) != g or any(y == 0 for y in eigenvalues):
                raise ValueError("need g nonzero eigenvalues")
        self.eigenvalues = eigenvalues

    @property
    def formal(self):
        return self.eigenvalues is None

    def specialize(self, poly):
        if self.formal:
            return poly
        return LaurentPoly(self.g, {(0,) * self.g: poly.evaluate(self.eigenvalues)})


def _check_parity(parity):
    if parity not in ("+", "-", "both"):
        raise ValueError(f"parity must be '+', '-' or 'both', got {parity!r}")


def trace_on_Hq(t, q, table, n=None, parity="both"):
    """y^{-n} sum_p h^(p, q) y^p over the chosen parity class of |p|."""
    _check_parity(parity)
    n = table.n if n is None else n
    if n != table.n or t.g != table.g:
        raise ValueError("torus element and table contexts differ")
    sub = table.restrict_parity(parity)
    poly = LaurentPoly(table.g, {tuple(x - n for x in p): h
                                 for (p, qq), h in sub.items() if qq == q})
    return t.specialize(poly)


def supertrace(t, table, n=None):
    """sum_q (-1)^q (Tr_+ - Tr_-) on H^q."""
    total = LaurentPoly(table.g)
    for q in table.qs():
        plus = trace_on_Hq(t, q, table, n, "+")
        minus = trace_on_Hq(t, q, table, n, "-")
        total = total + (plus - minus) * (-1) ** q
    return total
