"""Sparse exact model of the exterior algebra on V (x) W.

V is a 2n-dimensional symplectic space and W is g-dimensional.  The degree-one
generators are ``v^I_i`` with column ``i`` in 1..g and fiber ``I`` in 1..2n,
ordered lexicographically by ``(column, fiber)``.  Internally a basis monomial
is an int bitmask whose set bits are the generators in increasing order.
"""

import json
from collections import namedtuple
from fractions import Fraction

from .linalg import inverse


class ContextError(ValueError):
    """Raised when operands live in different (n, g) contexts."""


GeneratorId = namedtuple("GeneratorId", ["column", "fiber"])


def _bit(n, gen):
    return (gen.column - 1) * 2 * n + (gen.fiber - 1)


def _check_gen(n, g, gen):
    if not (1 <= gen.column <= g and 1 <= gen.fiber <= 2 * n):
        raise ContextError(f"generator {tuple(gen)} outside context (n={n}, g={g})")


def popcount(x):
    return bin(x).count("1")


def wedge_sign(a, b):
    """Sign of ``mono(a) ^ mono(b)`` after sorting, or 0 when they share a generator."""
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if swaps & 1 else 1


def mask_to_monomial(n, mask):
    gens = []
    k = 0
    while mask:
        if mask & 1:
            gens.append(GeneratorId(k // (2 * n) + 1, k % (2 * n) + 1))
        mask >>= 1
        k += 1
    return tuple(gens)


def monomial_to_mask(n, gens):
    """Bitmask and sign of a (possibly unsorted) generator word."""
    mask, sign = 0, 1
    for gen in gens:
        bit = 1 << _bit(n, gen)
        s = wedge_sign(mask, bit)
        if not s:
            return 0, 0
        mask |= bit
        sign *= s
    return mask, sign


def multidegree(n, g, mask):
    width = 2 * n
    block = (1 << width) - 1
    return tuple(popcount((mask >> (width * i)) & block) for i in range(g))


def is_odd(degree):
    """True for H_- (odd total degree), False for H_+."""
    return sum(degree) % 2 == 1


class Multivector:
    """Element of Lambda(V (x) W) with exact rational coefficients.

    ``terms`` maps monomial bitmasks to nonzero Fractions.  Instances are
    treated as immutable.
    """

    __slots__ = ("n", "g", "terms")

    def __init__(self, n, g, terms=None):
        self.n = n
        self.g = g
        clean = {}
        for mask, c in (terms or {}).items():
            if c:
                clean[mask] = Fraction(c)
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, n, g):
        return cls(n, g)

    @classmethod
    def one(cls, n, g):
        return cls(n, g, {0: 1})

    @classmethod
    def generator(cls, n, g, column, fiber):
        gen = GeneratorId(column, fiber)
        _check_gen(n, g, gen)
        return cls(n, g, {1 << _bit(n, gen): 1})

    @classmethod
    def monomial(cls, n, g, gens, coef=1):
        gens = [GeneratorId(*x) for x in gens]
        for gen in gens:
            _check_gen(n, g, gen)
        mask, sign = monomial_to_mask(n, gens)
        return cls(n, g, {mask: sign * Fraction(coef)} if sign else {})

    @classmethod
    def basis(cls, n, g):
        return [cls(n, g, {m: 1}) for m in range(1 << (2 * n * g))]

    # arithmetic

    @property
    def context(self):
        return (self.n, self.g)

    def _same(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.context != self.context:
            raise ContextError(f"context mismatch {self.context} vs {other.context}")
        return True

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.n, self.g, out)

    def __neg__(self):
        return Multivector(self.n, self.g, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Multivector):
            return NotImplemented
        scalar = Fraction(scalar)
        return Multivector(self.n, self.g, {m: scalar * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.g, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms):
            gens = mask_to_monomial(self.n, mask)
            word = "^".join(f"v{g.fiber}_{g.column}" for g in gens) or "1"
            parts.append(f"{self.terms[mask]}*{word}")
        return " + ".join(parts)

    def degree(self):
        """Total degree, if homogeneous; otherwise None."""
        degs = {popcount(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    # serialization

    def to_json(self):
        terms = []
        for mask in sorted(self.terms, key=lambda m: mask_to_monomial(self.n, m)):
            c = self.terms[mask]
            terms.append({
                "mono": [list(x) for x in mask_to_monomial(self.n, mask)],
                "coef": f"{c.numerator}/{c.denominator}",
            })
        return {"n": self.n, "g": self.g, "terms": terms}

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        n, g = data["n"], data["g"]
        out = cls(n, g)
        for t in data["terms"]:
            out = out + cls.monomial(n, g, [tuple(x) for x in t["mono"]], Fraction(t["coef"]))
        return out


def wedge(a, b):
    """Exterior product with canonical sorted-monomial signs."""
    if a.context != b.context:
        raise ContextError(f"context mismatch {a.context} vs {b.context}")
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            s = wedge_sign(ma, mb)
            if s:
                m = ma | mb
                out[m] = out.get(m, 0) + s * ca * cb
    return Multivector(a.n, a.g, out)


def interior(gen, a):
    """Contraction i^j_J with ``i^j_J v^I_i = delta^j_i delta^I_J``; an antiderivation."""
    gen = GeneratorId(*gen)
    _check_gen(a.n, a.g, gen)
    k = _bit(a.n, gen)
    bit = 1 << k
    below = bit - 1
    out = {}
    for m, c in a.terms.items():
        if m & bit:
            s = -1 if popcount(m & below) & 1 else 1
            out[m ^ bit] = s * c
    return Multivector(a.n, a.g, out)


def grade_split(a):
    """Split into homogeneous pieces keyed by multidegree ``(p_1, ..., p_g)``."""
    parts = {}
    for m, c in a.terms.items():
        parts.setdefault(multidegree(a.n, a.g, m), {})[m] = c
    return {d: Multivector(a.n, a.g, t) for d, t in sorted(parts.items())}


class SymplecticForm:
    """Nondegenerate antisymmetric form eps_IJ on V together with its inverse eps^IJ.

    ``strict=False`` skips validation; it exists so test suites can inject a
    corrupted form and watch the operator identities fail.
    """

    def __init__(self, matrix, strict=True):
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        size = len(self.matrix)
        if size % 2 or any(len(row) != size for row in self.matrix):
            raise ValueError("symplectic form must be a square matrix of even size")
        self.n = size // 2
        if strict:
            for i in range(size):
                for j in range(size):
                    if self.matrix[i][j] != -self.matrix[j][i]:
                        raise ValueError("form is not antisymmetric")
        try:
            self.inverse = tuple(tuple(row) for row in inverse(self.matrix))
        except ZeroDivisionError:
            raise ValueError("form is degenerate") from None

    @classmethod
    def standard(cls, n):
        """Block form [[0, I_n], [-I_n, 0]]."""
        size = 2 * n
        m = [[0] * size for _ in range(size)]
        for i in range(n):
            m[i][i + n] = 1
            m[i + n][i] = -1
        return cls(m)

    def lower(self, I, J):
        """eps_IJ with 1-based indices."""
        return self.matrix[I - 1][J - 1]

    def upper(self, I, J):
        """eps^IJ with 1-based indices."""
        return self.inverse[I - 1][J - 1]

    def flipped(self, I, J):
        """Copy with the single entry eps_IJ negated (no validation)."""
        m = [list(row) for row in self.matrix]
        m[I - 1][J - 1] = -m[I - 1][J - 1]
        return SymplecticForm(m, strict=False)

    def __eq__(self, other):
        return isinstance(other, SymplecticForm) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)
