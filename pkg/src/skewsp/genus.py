"""Truncated symbolic algebra in Chern roots and genus variables.

Riemann-Roch for the pluri chi_y genus, extraction of Chern numbers from its
coefficients in the (1 - y_j) basis, and the surface integral of
Todd . ch(Omega^1 tensor power) used for K3.
"""

import json
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

MAX_ROOTS = 6


class ChernSeries:
    """Polynomial in roots x_1..x_n and genus variables t_1..t_g.

    Terms of total root degree above ``n`` are dropped on construction, so the
    truncation is part of the ring.  Keys are ``(x_exponents, t_exponents)``.
    """

    __slots__ = ("n", "g", "terms")

    def __init__(self, n, g, terms=None):
        self.n = n
        self.g = g
        out = {}
        for (xe, te), c in (terms or {}).items():
            if sum(xe) > n or not c:
                continue
            key = (tuple(xe), tuple(te))
            out[key] = out.get(key, 0) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def constant(cls, n, g, c=1):
        return cls(n, g, {((0,) * n, (0,) * g): c})

    @classmethod
    def root(cls, n, g, r):
        xe = [0] * n
        xe[r - 1] = 1
        return cls(n, g, {(tuple(xe), (0,) * g): 1})

    @classmethod
    def genus_var(cls, n, g, j):
        te = [0] * g
        te[j - 1] = 1
        return cls(n, g, {((0,) * n, tuple(te)): 1})

    def __add__(self, other):
        if not isinstance(other, ChernSeries):
            other = ChernSeries.constant(self.n, self.g, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ChernSeries(self.n, self.g, out)

    __radd__ = __add__

    def __neg__(self):
        return ChernSeries(self.n, self.g, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, ChernSeries) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ChernSeries):
            c = Fraction(other)
            return ChernSeries(self.n, self.g, {k: c * v for k, v in self.terms.items()})
        out = {}
        n = self.n
        for (xa, ta), ca in self.terms.items():
            da = sum(xa)
            for (xb, tb), cb in other.terms.items():
                if da + sum(xb) > n:
                    continue
                key = (tuple(a + b for a, b in zip(xa, xb)), tuple(a + b for a, b in zip(ta, tb)))
                out[key] = out.get(key, 0) + ca * cb
        return ChernSeries(n, self.g, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ChernSeries.constant(self.n, self.g)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, ChernSeries) and (self.n, self.g, self.terms) == (
            other.n, other.g, other.terms)

    def root_degree_part(self, d):
        return ChernSeries(self.n, self.g, {k: c for k, c in self.terms.items() if sum(k[0]) == d})

    def top(self):
        return self.root_degree_part(self.n)

    def coefficients_in_t(self):
        """Map t-exponent -> {x-exponent: coefficient}."""
        out = {}
        for (xe, te), c in self.terms.items():
            out.setdefault(te, {})[xe] = c
        return dict(sorted(out.items()))

    def is_symmetric_in_roots(self):
        for perm in permutations(range(self.n)):
            for (xe, te), c in self.terms.items():
                moved = (tuple(xe[p] for p in perm), te)
                if self.terms.get(moved) != c:
                    return False
        return True


def exp_neg_root(n, g, r):
    """e^{-x_r} truncated at degree n."""
    x = ChernSeries.root(n, g, r)
    out = ChernSeries.constant(n, g)
    term = ChernSeries.constant(n, g)
    for k in range(1, n + 1):
        term = term * x * Fraction(-1, k)
        out = out + term
    return out


def _todd_coefficients(n):
    # x / (1 - e^{-x}) = 1 / (sum_k (-1)^k x^k / (k+1)!), inverted term by term
    d = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(d[j] * inv[k - j] for j in range(1, k + 1)))
    return inv


def todd_series(n, g=0):
    """prod_i x_i / (1 - e^{-x_i}) truncated at degree n."""
    if n < 1 or n > MAX_ROOTS:
        raise ValueError(f"n={n} outside 1..{MAX_ROOTS}")
    coeffs = _todd_coefficients(n)
    out = ChernSeries.constant(n, g)
    for r in range(1, n + 1):
        x = ChernSeries.root(n, g, r)
        factor = ChernSeries.constant(n, g)
        power = ChernSeries.constant(n, g)
        for k in range(1, n + 1):
            power = power * x
            factor = factor + power * coeffs[k]
        out = out * factor
    return out


def chi_genus_series(n, g):
    """Top-degree part of Todd . prod_j prod_i (a_i + t_j e_i), with t_j = 1 - y_j.

    e_i = e^{-x_i}, a_i = 1 - e_i.  This is the pluri chi_{-y} genus of a
    complex n-fold written in the (1 - y) basis, with root-polynomial
    coefficients to be paired with the fundamental class.
    """
    if n > 4 or g > 3:
        raise ValueError("guard: n <= 4 and g <= 3")
    es = [exp_neg_root(n, g, r) for r in range(1, n + 1)]
    out = todd_series(n, g)
    for j in range(1, g + 1):
        t = ChernSeries.genus_var(n, g, j)
        for e in es:
            out = out * ((1 - e) + t * e)
    return out.top()


class ChernMonomialValue:
    """Linear combination of Chern monomials c_{q_1} ... c_{q_k}.

    Keys are weakly decreasing tuples of positive indices; () is the unit.
    """

    def __init__(self, terms=None):
        out = {}
        for k, c in (terms or {}).items():
            k = tuple(sorted((q for q in k if q), reverse=True))
            out[k] = out.get(k, 0) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def monomial(cls, qs, c=1):
        return cls({tuple(qs): c})

    def __eq__(self, other):
        return isinstance(other, ChernMonomialValue) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ChernMonomialValue(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + ("*".join(f"c{q}" for q in k) or "1")
                          for k, c in sorted(self.terms.items()))

    def evaluate(self, chern):
        """Pair with numbers: ``chern`` maps i -> c_i (c_0 = 1 implied)."""
        total = Fraction(0)
        for k, c in self.terms.items():
            v = c
            for q in k:
                v *= chern.get(q, 0)
            total += v
        return total


def _elementary(n, k):
    out = {}
    for subset in combinations(range(n), k):
        xe = [0] * n
        for s in subset:
            xe[s] = 1
        out[tuple(xe)] = Fraction(1)
    return out


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def elementary_symmetric_extract(poly, n=None):
    """Rewrite a symmetric root polynomial in c_1..c_n (elementary symmetric functions).

    ``poly`` is a ChernSeries without genus variables, or a dict
    ``{x_exponents: coefficient}``.  Non-symmetric input raises ValueError.
    """
    if isinstance(poly, ChernSeries):
        n = poly.n
        if any(any(te) for (_, te) in poly.terms):
            raise ValueError("series still depends on genus variables")
        poly = {xe: c for (xe, _), c in poly.terms.items()}
    if n is None:
        n = len(next(iter(poly))) if poly else 0
    poly = {tuple(k): Fraction(v) for k, v in poly.items() if v}
    for xe, c in poly.items():
        for perm in permutations(range(n)):
            if poly.get(tuple(xe[p] for p in perm)) != c:
                raise ValueError("polynomial is not symmetric in the roots")
    out = {}
    elem = [None] + [_elementary(n, k) for k in range(1, n + 1)]
    while poly:
        lead = max(poly)
        c = poly[lead]
        # lead is weakly decreasing for a symmetric polynomial's lex-max term
        powers = [lead[k] - (lead[k + 1] if k + 1 < n else 0) for k in range(n)]
        term = {(0,) * n: Fraction(1)}
        key = []
        for k, pw in enumerate(powers, start=1):
            for _ in range(pw):
                term = _poly_mul(term, elem[k])
                key.append(k)
        out[tuple(key)] = out.get(tuple(key), 0) + c
        for e, v in term.items():
            w = poly.get(e, 0) - c * v
            if w:
                poly[e] = w
            else:
                poly.pop(e, None)
    return ChernMonomialValue(out)


def chern_coefficients(n, g):
    """Coefficient of each t-monomial in chi_genus_series, as Chern monomials."""
    series = chi_genus_series(n, g)
    return {te: elementary_symmetric_extract(coeffs, n)
            for te, coeffs in series.coefficients_in_t().items()}


def cstring_identity(n, g):
    """For every (q_1..q_g) with sum n: (extracted, expected c_{q_1}...c_{q_g}) pairs."""
    coeffs = chern_coefficients(n, g)
    out = {}
    for qs in _compositions(n, g):
        te = tuple(n - q for q in qs)
        got = coeffs.get(te, ChernMonomialValue())
        out[qs] = (got, ChernMonomialValue.monomial(qs))
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class GenusPolynomial:
    """Polynomial in y_1..y_g (or t_j = 1 - y_j) with rational coefficients."""

    def __init__(self, g, terms=None, basis="y"):
        self.g = g
        self.basis = basis
        out = {}
        for e, c in (terms or {}).items():
            out[tuple(e)] = out.get(tuple(e), 0) + Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        return (isinstance(other, GenusPolynomial) and self.basis == other.basis
                and self.terms == other.terms)

    def __repr__(self):
        var = "y" if self.basis == "y" else "t"
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"{var}{j + 1}^{k}" for j, k in enumerate(e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def evaluate(self, values):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def change_basis(self):
        """Substitute y = 1 - t (or t = 1 - y): the map is an involution."""
        out = {}
        for e, c in self.terms.items():
            expanded = {(): c}
            for k in e:
                # (1 - s)^k = sum_r binom(k, r) (-1)^r s^r
                nxt = {}
                for pre, v in expanded.items():
                    for r in range(k + 1):
                        w = v * _binom(k, r) * (-1) ** r
                        nxt[pre + (r,)] = nxt.get(pre + (r,), 0) + w
                expanded = nxt
            for key, v in expanded.items():
                out[key] = out.get(key, 0) + v
        other = "one-minus-y" if self.basis == "y" else "y"
        return GenusPolynomial(self.g, out, other)

    def in_basis(self, basis):
        return self if basis == self.basis else self.change_basis()

    def to_json(self):
        return {"basis": self.basis, "g": self.g,
                "terms": {",".join(map(str, e)): f"{c.numerator}/{c.denominator}"
                          for e, c in sorted(self.terms.items())}}

    def dumps(self):
        return json.dumps(self.to_json())


def _binom(k, r):
    return factorial(k) // (factorial(r) * factorial(k - r))


def genus_from_table(table):
    """chi_{-y} = sum (-1)^(q + |p|) h^(p, q) prod y_i^p_i."""
    out = {}
    for (p, q), h in table.items():
        out[p] = out.get(p, 0) + (-1) ** (q + sum(p)) * h
    return GenusPolynomial(table.g, out, "y")


def genus_from_chern_numbers(n, g, chern_numbers):
    """Length-g genus (in the t = 1 - y basis) of an n-fold with given Chern numbers.

    ``chern_numbers`` maps weakly decreasing index tuples of total n, like
    (2,) or (1, 1), to the number c_{q_1}...c_{q_k}[X].
    """
    out = {}
    for te, value in chern_coefficients(n, g).items():
        total = Fraction(0)
        for key, c in value.terms.items():
            total += c * Fraction(chern_numbers.get(key, 0))
        out[te] = total
    return GenusPolynomial(g, out, "one-minus-y")


def chern_numbers_from_genus(n, poly):
    """Read c_{q_1}...c_{q_n}[X] off a length-n genus via the (1 - y) coefficients."""
    poly = poly.in_basis("one-minus-y")
    out = {}
    for qs in _compositions(n, poly.g):
        te = tuple(n - q for q in qs)
        key = tuple(sorted((q for q in qs if q), reverse=True))
        out[key] = poly.terms.get(te, Fraction(0))
    return out


def chern_monomial_keys(n):
    """Partitions of n as weakly decreasing tuples."""
    def rec(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest
    return list(rec(n, n))


def evaluate_surface_rr(m, c1=0, c2=24):
    """int_X Todd(X) ch((Omega^1)^{(x) m}) on a surface with the given Chern numbers."""
    if m < 0 or m > 8:
        raise ValueError(f"m={m} outside 0..8")
    n = 2
    ch = exp_neg_root(n, 0, 1) + exp_neg_root(n, 0, 2)
    series = (todd_series(n) * ch ** m).top()
    value = elementary_symmetric_extract(series)
    total = value.evaluate({1: c1, 2: c2})
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Riemann-Roch value {total}")
    return int(total)
