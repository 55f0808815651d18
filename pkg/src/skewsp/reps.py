"""Weight combinatorics for Sp(g) and GL(m).

Weyl dimension formula of type C, hook-content dimensions of Schur functors,
the Sp(V) x Sp(g) decomposition of Lambda(V (x) W) and the Weyl-group
multiplicity formula for pluri-Hodge tables.
"""

import json
from collections import namedtuple
from fractions import Fraction
from itertools import permutations, product
from math import prod


class Weight(tuple):
    """Integer g-tuple; dominant when weakly decreasing and nonnegative."""

    def __new__(cls, entries):
        return super().__new__(cls, (int(x) for x in entries))

    @property
    def is_dominant(self):
        return all(a >= b for a, b in zip(self, self[1:])) and (not self or self[-1] >= 0)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other))


def rho(g):
    return Weight(range(g, 0, -1))


class SignedPermutation(namedtuple("SignedPermutation", ["perm", "signs"])):
    """Element of the hyperoctahedral group W_g acting on g-tuples.

    ``w(x)[k] = signs[k] * x[perm[k]]``.
    """

    __slots__ = ()

    def __call__(self, x):
        return Weight(s * x[p] for p, s in zip(self.perm, self.signs))

    @property
    def length_parity(self):
        """[w]: number of sign changes, plus one for an odd permutation."""
        flips = sum(1 for s in self.signs if s < 0)
        return flips + (1 if _perm_parity(self.perm) else 0)

    @property
    def sign(self):
        return -1 if self.length_parity % 2 else 1

    def compose(self, other):
        """(self o other)(x) = self(other(x))."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return SignedPermutation(perm, signs)


def _perm_parity(perm):
    seen = [False] * len(perm)
    odd = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        odd ^= (length - 1) & 1
    return odd


def weyl_group(g):
    return [SignedPermutation(p, s)
            for p in permutations(range(g))
            for s in product((1, -1), repeat=g)]


def sp_irrep_dim(g, mu):
    """Dimension of the irreducible Sp(g) module with highest weight mu (rank g)."""
    mu = Weight(mu)
    if len(mu) != g:
        raise ValueError(f"weight {tuple(mu)} does not have {g} entries")
    if not mu.is_dominant:
        raise ValueError(f"weight {tuple(mu)} is not dominant")
    r = rho(g)
    lam = mu + r
    num = den = 1
    for i in range(g):
        num *= lam[i]
        den *= r[i]
        for j in range(i + 1, g):
            num *= (lam[i] - lam[j]) * (lam[i] + lam[j])
            den *= (r[i] - r[j]) * (r[i] + r[j])
    return num // den


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts if p]
        if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 0 for p in parts):
            raise ValueError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def transpose(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))


def partitions_in_box(rows, cols):
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    def rec(k, cap):
        if k == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in rec(k - 1, first):
                yield (first,) + rest
    for p in rec(rows, cols):
        yield Partition(p)


def gl_schur_dim(m, lam):
    """dim S_lam(C^m) by the hook-content formula; 0 if lam has more than m rows."""
    lam = Partition(lam)
    if len(lam) > m:
        return 0
    conj = lam.transpose()
    num = den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= m + j - i
            den *= (row - j) + (conj[j] - i) - 1
    return num // den


DecompositionTerm = namedtuple("DecompositionTerm", ["mu", "mu_tilde", "dim_spV", "dim_spg"])


def enumerate_decomposition(n, g):
    """Pairs (mu for Sp(g), mu~ for Sp(V)) in Lambda(V (x) W), dim V = 2n.

    mu = (n - a_g, ..., n - a_1) for n >= a_1 >= ... >= a_g >= 0 and
    mu~_k = #{i : a_i >= k}, k = 1..n.
    """
    out = []
    for a in sorted(partitions_in_box(g, n)):
        a = tuple(a) + (0,) * (g - len(a))
        mu = Weight(n - x for x in reversed(a))
        mu_t = Weight(sum(1 for x in a if x - k >= 0) for k in range(1, n + 1))
        out.append(DecompositionTerm(mu, mu_t, sp_irrep_dim(n, mu_t), sp_irrep_dim(g, mu)))
    return out


def decomposition_json(terms):
    return json.dumps([{"mu": list(t.mu), "mu_tilde": list(t.mu_tilde),
                        "dim_spV": t.dim_spV, "dim_spg": t.dim_spg} for t in terms])


class HodgeTable:
    """Pluri-Hodge numbers h^(p, q) for one manifold of dimension 2n, length g.

    Keys are ``(p, q)`` with ``p`` a g-tuple.  Lookups outside 0 <= p_i <= 2n,
    q >= 0 (or simply absent) return 0.
    """

    def __init__(self, n, g, entries=None):
        self.n = n
        self.g = g
        self.entries = {}
        for (p, q), h in (entries or {}).items():
            p = tuple(p)
            if len(p) != g:
                raise ValueError(f"profile {p} does not have length {g}")
            if h < 0:
                raise ValueError("dimensions are nonnegative")
            if h:
                self.entries[(p, q)] = h

    def __getitem__(self, key):
        p, q = key
        p = tuple(p)
        if q < 0 or any(x < 0 or x > 2 * self.n for x in p):
            return 0
        return self.entries.get((p, q), 0)

    def items(self):
        return sorted(self.entries.items())

    def qs(self):
        return sorted({q for (_, q) in self.entries})

    def restrict_parity(self, parity):
        """Entries with |p| even ("+") or odd ("-"); "both" keeps everything."""
        if parity == "both":
            return self
        want = 0 if parity == "+" else 1
        return HodgeTable(self.n, self.g, {k: v for k, v in self.entries.items()
                                           if sum(k[0]) % 2 == want})

    def to_json(self):
        return {"n": self.n, "g": self.g,
                "entries": [{"p": list(p), "q": q, "h": h} for (p, q), h in self.items()]}


def multiplicity(table, q, a, n=None, g=None, parity="both"):
    """Multiplicity of R(a) in H^q (or H^q_+/H^q_-) from the Weyl-group sum.

    m = sum_w (-1)^[w] h^(n + w(a + rho) - rho, q), over all 2^g g! elements.
    """
    n = table.n if n is None else n
    g = table.g if g is None else g
    if (n, g) != (table.n, table.g):
        raise ValueError("table context does not match (n, g)")
    a = Weight(a)
    if len(a) != g or not a.is_dominant:
        raise ValueError(f"{tuple(a)} is not a dominant weight of Sp({g})")
    table = table.restrict_parity(parity)
    r = rho(g)
    shift = a + r
    base = Weight([n] * g)
    total = 0
    for w in weyl_group(g):
        total += w.sign * table[(base + w(shift) - r, q)]
    return total


def multiplicity_json(results):
    return json.dumps([{"a": list(a), "q": q, "m": m} for a, q, m in results])


def invariant_graded_dims(n, g, max_degree=None):
    """Per total degree, dim of Sp(V)-invariants predicted by GL(W) Schur functors.

    Sum of dim S_mu(W) over partitions mu whose rows all have even length,
    first row <= 2n, at most g rows.
    """
    out = {}
    for mu in partitions_in_box(g, 2 * n):
        if any(p % 2 for p in mu):
            continue
        d = mu.size
        if max_degree is not None and d > max_degree:
            continue
        out[d] = out.get(d, 0) + gl_schur_dim(g, mu)
    if max_degree is not None:
        for d in range(max_degree + 1):
            out.setdefault(d, 0)
    return dict(sorted(out.items()))


def multiplicity_closed_form_last(table, q, p):
    """m^q(n, ..., n, n - p) = h^((0, ..., 0, p), q) - h^((0, ..., 0, p - 2), q), 0 <= p <= n."""
    zeros = (0,) * (table.g - 1)
    return table[(zeros + (p,), q)] - table[(zeros + (p - 2,), q)]


def multiplicity_closed_form_sp2(table, q, p1, p2):
    """The eight-term expansion of m^q(n - p1, n - p2) for Sp(2)."""
    h = lambda x, y: table[((x, y), q)]
    return (h(p1, p2) - h(p1, p2 - 2) - h(p1 - 4, p2) + h(p1 - 4, p2 - 2)
            - h(p2 + 1, p1 - 1) + h(p2 + 1, p1 - 3) + h(p2 - 3, p1 - 1)
            - h(p2 - 3, p1 - 3))


def random_dual_table(n, g, rng, qs=(0, 1, 2), bound=50):
    """Random table with h(..., p_i, ...) = h(..., 2n - p_i, ...) in every slot."""
    entries = {}
    for p in product(range(2 * n + 1), repeat=g):
        rep = tuple(min(x, 2 * n - x) for x in p)
        for q in qs:
            key = (rep, q)
            if key not in entries:
                entries[key] = rng.randint(0, bound)
            entries[(p, q)] = entries[key]
    return HodgeTable(n, g, entries)
