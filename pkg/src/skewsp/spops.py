"""The sp(g) operators L_ij, Lambda^ij, h^i_j on Lambda(V (x) W), and sp(V).

Operators are stored exactly as defined on the exterior algebra:

    L_ij      = 1/2 sum_{I,J} eps_IJ  v^I_i ^ v^J_j ^ .
    Lambda^ij = 1/2 sum_{I,J} eps^IJ  i^i_I i^j_J
    h^i_j     = sum_J v^J_j ^ i^i_J

No shift of h by n is applied here; the highest-weight convention
H_i = n - h^i_i lives in the adapters that need it.
"""

import json
from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .exalg import (ContextError, Multivector, SymplecticForm, multidegree,
                    popcount, wedge_sign)
from .linalg import matadd, matmul, nullspace

MAX_EXTERIOR_BITS = 12


class GuardError(ValueError):
    """Raised when a request would enumerate an exponentially large basis."""


def check_guard(n, g, limit=MAX_EXTERIOR_BITS):
    bits = 2 * n * g
    if bits > limit:
        raise GuardError(
            f"2ng = {bits} exceeds the guard {limit}: basis would have 2^{bits} = "
            f"{1 << bits} elements")


class SpgGenerator(namedtuple("SpgGenerator", ["kind", "i", "j"])):
    """One of L_ij, Lambda^ij (kind "L" / "Lambda", stored with i <= j) or h^i_j (kind "H")."""

    __slots__ = ()

    def __new__(cls, kind, i, j):
        if kind not in ("L", "Lambda", "H"):
            raise ValueError(f"unknown generator kind {kind!r}")
        if kind != "H" and i > j:
            i, j = j, i
        return super().__new__(cls, kind, i, j)

    def __str__(self):
        if self.kind == "L":
            return f"L_{self.i}{self.j}"
        if self.kind == "Lambda":
            return f"Lambda^{self.i}{self.j}"
        return f"h^{self.i}_{self.j}"


def L(i, j):
    return SpgGenerator("L", i, j)


def Lam(i, j):
    return SpgGenerator("Lambda", i, j)


def H(i, j):
    return SpgGenerator("H", i, j)


def all_generators(g):
    gens = []
    for i in range(1, g + 1):
        for j in range(i, g + 1):
            gens.append(L(i, j))
            gens.append(Lam(i, j))
    gens.extend(H(i, j) for i in range(1, g + 1) for j in range(1, g + 1))
    return gens


def _form(n, form):
    if form is None:
        return SymplecticForm.standard(n)
    if form.n != n:
        raise ContextError(f"form has n={form.n}, context has n={n}")
    return form


def _bit(n, column, fiber):
    return 1 << ((column - 1) * 2 * n + fiber - 1)


def _contract(m, bit):
    """i_bit applied to monomial m: (mask, sign) or None."""
    if not m & bit:
        return None
    return m ^ bit, (-1 if popcount(m & (bit - 1)) & 1 else 1)


def _prepend(m, bit):
    """v_bit ^ monomial m: (mask, sign) or None."""
    if m & bit:
        return None
    return m | bit, (-1 if popcount(m & (bit - 1)) & 1 else 1)


@lru_cache(maxsize=None)
def _gen_on_mask(n, g, form, gen, m):
    out = {}

    def acc(mask, c):
        s = out.get(mask, 0) + c
        if s:
            out[mask] = s
        else:
            out.pop(mask, None)

    size = 2 * n
    half = Fraction(1, 2)
    if gen.kind == "L":
        for I in range(1, size + 1):
            for J in range(1, size + 1):
                e = form.lower(I, J)
                if not e:
                    continue
                bi, bj = _bit(n, gen.i, I), _bit(n, gen.j, J)
                s1 = wedge_sign(bi, bj)
                if not s1:
                    continue
                s2 = wedge_sign(bi | bj, m)
                if s2:
                    acc(bi | bj | m, half * e * s1 * s2)
    elif gen.kind == "Lambda":
        for I in range(1, size + 1):
            for J in range(1, size + 1):
                e = form.upper(I, J)
                if not e:
                    continue
                r1 = _contract(m, _bit(n, gen.j, J))
                if r1 is None:
                    continue
                r2 = _contract(r1[0], _bit(n, gen.i, I))
                if r2 is None:
                    continue
                acc(r2[0], half * e * r1[1] * r2[1])
    else:
        for J in range(1, size + 1):
            r1 = _contract(m, _bit(n, gen.i, J))
            if r1 is None:
                continue
            r2 = _prepend(r1[0], _bit(n, gen.j, J))
            if r2 is None:
                continue
            acc(r2[0], r1[1] * r2[1])
    return out


def apply_generator(gen, a, form=None):
    """Action of an sp(g) generator on a Multivector."""
    form = _form(a.n, form)
    if gen.kind == "H":
        bad = not (1 <= gen.i <= a.g and 1 <= gen.j <= a.g)
    else:
        bad = not (1 <= gen.i <= gen.j <= a.g)
    if bad:
        raise ContextError(f"{gen} outside context g={a.g}")
    out = {}
    for m, c in a.terms.items():
        for mm, v in _gen_on_mask(a.n, a.g, form, gen, m).items():
            out[mm] = out.get(mm, 0) + c * v
    return Multivector(a.n, a.g, out)


class SpVGenerator:
    """Element X of sp(V); acts on every column V_i by ``v^I_i -> sum_K X_KI v^K_i``.

    Membership means X preserves the bivector eps, i.e. ``X eps + eps X^T = 0``.
    For the standard block form this is the same as ``X^T eps + eps X = 0``.
    """

    def __init__(self, matrix, form=None, check=True):
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        size = len(self.matrix)
        self.n = size // 2
        self.form = _form(self.n, form)
        if check and not self.is_member():
            raise ValueError("matrix is not in sp(V) for the given form")

    def is_member(self):
        size = 2 * self.n
        X, E = self.matrix, self.form.matrix
        for a in range(size):
            for b in range(size):
                s = sum(X[a][k] * E[k][b] + E[a][k] * X[b][k] for k in range(size))
                if s:
                    return False
        return True

    def __repr__(self):
        return f"SpVGenerator({[list(map(str, r)) for r in self.matrix]})"


def spv_spanning_set(n, form=None):
    """Basis of sp(V) with 2n^2 + n elements.

    X eps is symmetric exactly when X preserves eps, so X = S eps^{-1} with S
    running over the elementary symmetric matrices E_ab + E_ba (a <= b).
    """
    form = _form(n, form)
    size = 2 * n
    inv = form.inverse
    out = []
    for a in range(size):
        for b in range(a, size):
            S = [[0] * size for _ in range(size)]
            S[a][b] += 1
            if a != b:
                S[b][a] += 1
            X = [[sum(S[r][k] * inv[k][c] for k in range(size)) for c in range(size)]
                 for r in range(size)]
            out.append(SpVGenerator(X, form))
    return out


def _spv_on_mask(n, g, X, m):
    out = {}
    size = 2 * n
    for i in range(1, g + 1):
        for I in range(1, size + 1):
            r1 = _contract(m, _bit(n, i, I))
            if r1 is None:
                continue
            for K in range(1, size + 1):
                x = X.matrix[K - 1][I - 1]
                if not x:
                    continue
                r2 = _prepend(r1[0], _bit(n, i, K))
                if r2 is None:
                    continue
                s = out.get(r2[0], 0) + x * r1[1] * r2[1]
                if s:
                    out[r2[0]] = s
                else:
                    out.pop(r2[0], None)
    return out


def apply_spv(X, a):
    """Derivation action of X in sp(V); trivial on the column index."""
    if not isinstance(X, SpVGenerator):
        X = SpVGenerator(X)
    if X.n != a.n:
        raise ContextError("sp(V) element has the wrong size")
    out = {}
    for m, c in a.terms.items():
        for mm, v in _spv_on_mask(a.n, a.g, X, m).items():
            out[mm] = out.get(mm, 0) + c * v
    return Multivector(a.n, a.g, out)


class OperatorExpr:
    """Rational combination of words in SpgGenerator / SpVGenerator.

    A word is a tuple applied right to left; the empty word is the identity.
    """

    def __init__(self, terms=None):
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, gen):
        return cls({(gen,): 1})

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            other = OperatorExpr.scalar(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return OperatorExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, OperatorExpr) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
            return OperatorExpr(out)
        return OperatorExpr({w: c * Fraction(other) for w, c in self.terms.items()})

    def __rmul__(self, other):
        return OperatorExpr({w: c * Fraction(other) for w, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            word = " ".join(str(x) for x in w) or "1"
            parts.append(f"{c}*{word}")
        return " + ".join(parts)

    def apply(self, a, form=None):
        out = Multivector(a.n, a.g)
        for w, c in self.terms.items():
            v = a
            for letter in reversed(w):
                if isinstance(letter, SpVGenerator):
                    v = apply_spv(letter, v)
                else:
                    v = apply_generator(letter, v, form)
            out = out + c * v
        return out

    def matrix(self, n, g, form=None):
        """Column-wise sparse matrix on the monomial basis of Lambda(V (x) W)."""
        form = _form(n, form)
        cache = {}
        total = {}
        for w, c in self.terms.items():
            m = {k: {k: Fraction(1)} for k in range(1 << (2 * n * g))}
            for letter in reversed(w):
                if letter not in cache:
                    cache[letter] = letter_matrix(letter, n, g, form)
                m = matmul(cache[letter], m)
            total = matadd((1, total), (c, m))
        return total


def commutator(a, b):
    return a * b - b * a


def letter_matrix(letter, n, g, form=None):
    form = _form(n, form)
    out = {}
    for k in range(1 << (2 * n * g)):
        if isinstance(letter, SpVGenerator):
            col = _spv_on_mask(n, g, letter, k)
        else:
            col = _gen_on_mask(n, g, form, letter, k)
        if col:
            out[k] = dict(col)
    return out


def _delta(a, b):
    return 1 if a == b else 0


def sp_relations(n, g):
    """Every instance of the sp(g) bracket relations as (label, lhs, rhs) triples."""
    op = OperatorExpr.of
    idx = range(1, g + 1)
    sym = [(i, j) for i in idx for j in idx if i <= j]
    rels = []
    for (i, j) in sym:
        for (k, l) in sym:
            rhs = OperatorExpr.scalar(Fraction(n, 2) * (_delta(i, l) * _delta(j, k)
                                                        + _delta(i, k) * _delta(j, l)))
            rhs = rhs - Fraction(1, 4) * (_delta(i, k) * op(H(j, l)) + _delta(i, l) * op(H(j, k))
                                          + _delta(j, k) * op(H(i, l)) + _delta(j, l) * op(H(i, k)))
            rels.append((f"[Lambda^{i}{j}, L_{k}{l}]", commutator(op(Lam(i, j)), op(L(k, l))), rhs))
    for k in idx:
        for l in idx:
            for (i, j) in sym:
                rhs = _delta(k, i) * op(L(l, j)) + _delta(k, j) * op(L(i, l))
                rels.append((f"[h^{k}_{l}, L_{i}{j}]", commutator(op(H(k, l)), op(L(i, j))), rhs))
                rhs = -_delta(i, l) * op(Lam(k, j)) - _delta(j, l) * op(Lam(i, k))
                rels.append((f"[h^{k}_{l}, Lambda^{i}{j}]",
                             commutator(op(H(k, l)), op(Lam(i, j))), rhs))
    pairs = [(i, j) for i in idx for j in idx]
    for a, (i, j) in enumerate(pairs):
        for (k, l) in pairs[a + 1:]:
            rhs = _delta(i, l) * op(H(k, j)) - _delta(k, j) * op(H(i, l))
            rels.append((f"[h^{i}_{j}, h^{k}_{l}]", commutator(op(H(i, j)), op(H(k, l))), rhs))
    for a, (i, j) in enumerate(sym):
        for (k, l) in sym[a + 1:]:
            rels.append((f"[Lambda^{i}{j}, Lambda^{k}{l}]",
                         commutator(op(Lam(i, j)), op(Lam(k, l))), OperatorExpr()))
            rels.append((f"[L_{i}{j}, L_{k}{l}]",
                         commutator(op(L(i, j)), op(L(k, l))), OperatorExpr()))
    return rels


@dataclass
class RelationReport:
    n: int
    g: int
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return all(ok for _, ok in self.entries)

    def failures(self):
        return [name for name, ok in self.entries if not ok]

    def to_json(self):
        return [{"relation": name, "residual_norm_zero": ok} for name, ok in self.entries]

    def dumps(self):
        return json.dumps(self.to_json(), indent=1)


def check_sp_relations(n, g, form=None):
    """Evaluate every sp(g) bracket relation as an operator on the full basis."""
    check_guard(n, g)
    form = _form(n, form) if form is not None else SymplecticForm.standard(n)
    report = RelationReport(n, g)
    for name, lhs, rhs in sp_relations(n, g):
        residual = (lhs - rhs).matrix(n, g, form)
        report.entries.append((name, not residual))
    return report


def check_commuting_actions(n, g, form=None):
    """[X, G] = 0 for X in the sp(V) spanning set and every sp(g) generator G."""
    check_guard(n, g)
    form = _form(n, form) if form is not None else SymplecticForm.standard(n)
    report = RelationReport(n, g)
    for a, X in enumerate(spv_spanning_set(n, form)):
        mx = letter_matrix(X, n, g, form)
        for gen in all_generators(g):
            mg = letter_matrix(gen, n, g, form)
            residual = matadd((1, matmul(mx, mg)), (-1, matmul(mg, mx)))
            report.entries.append((f"[X_{a}, {gen}]", not residual))
    return report


@dataclass
class InvariantSubspace:
    n: int
    g: int
    basis: dict  # multidegree -> list of Multivector

    @property
    def dims(self):
        return {d: len(v) for d, v in self.basis.items() if v}

    @property
    def total(self):
        return sum(len(v) for v in self.basis.values())

    def dims_by_total_degree(self):
        out = {}
        for d, v in self.basis.items():
            if v:
                out[sum(d)] = out.get(sum(d), 0) + len(v)
        return dict(sorted(out.items()))

    def to_json(self):
        return [{"degree": list(d), "basis": [v.to_json() for v in vs]}
                for d, vs in sorted(self.basis.items()) if vs]


def invariant_subspace(n, g, form=None):
    """Sp(V)-invariants of Lambda(V (x) W), block by multidegree (joint kernel of sp(V))."""
    check_guard(n, g)
    form = _form(n, form) if form is not None else SymplecticForm.standard(n)
    spanning = spv_spanning_set(n, form)
    blocks = {}
    for m in range(1 << (2 * n * g)):
        blocks.setdefault(multidegree(n, g, m), []).append(m)
    basis = {}
    for deg, masks in sorted(blocks.items()):
        index = {m: k for k, m in enumerate(masks)}
        rows = {}
        for a, X in enumerate(spanning):
            for m in masks:
                for out, c in _spv_on_mask(n, g, X, m).items():
                    rows.setdefault((a, out), {})[index[m]] = c
        kernel = nullspace(list(rows.values()), len(masks))
        basis[deg] = [Multivector(n, g, {masks[k]: c for k, c in vec.items()})
                      for vec in kernel]
    return InvariantSubspace(n, g, basis)


class Exp(namedtuple("Exp", ["gen", "t"])):
    """exp(t * gen) for a nilpotent generator gen (kind L or Lambda)."""

    __slots__ = ()

    def __new__(cls, gen, t):
        if gen.kind not in ("L", "Lambda"):
            raise ValueError("only L and Lambda exponentials are nilpotent")
        return super().__new__(cls, gen, Fraction(t))


class Torus(namedtuple("Torus", ["eigenvalues"])):
    """Diagonal element with eigenvalues y_1..y_g; acts on multidegree p by prod y_i^(p_i - n)."""

    __slots__ = ()

    def __new__(cls, eigenvalues):
        ys = tuple(Fraction(y) for y in eigenvalues)
        if any(y == 0 for y in ys):
            raise ValueError("torus eigenvalues must be nonzero")
        return super().__new__(cls, ys)


class GroupElementFactored:
    """Finite product of Torus and Exp factors, acting on the right.

    ``alpha . (u1 * u2) == (alpha . u1) . u2``: factors are applied in list order.
    """

    def __init__(self, factors=()):
        self.factors = tuple(factors)

    def __mul__(self, other):
        return GroupElementFactored(self.factors + other.factors)

    def inverse(self):
        inv = []
        for f in reversed(self.factors):
            if isinstance(f, Torus):
                inv.append(Torus([1 / y for y in f.eigenvalues]))
            else:
                inv.append(Exp(f.gen, -f.t))
        return GroupElementFactored(inv)


def _apply_exp(factor, a, form):
    out = a
    term = a
    k = 0
    while term:
        k += 1
        term = apply_generator(factor.gen, term, form) * (factor.t / k)
        out = out + term
    return out


def _apply_torus(factor, a):
    if len(factor.eigenvalues) != a.g:
        raise ContextError("torus element has the wrong rank")
    out = {}
    for m, c in a.terms.items():
        scale = Fraction(1)
        for y, p in zip(factor.eigenvalues, multidegree(a.n, a.g, m)):
            scale *= y ** (p - a.n)
        out[m] = c * scale
    return Multivector(a.n, a.g, out)


def apply_group_element(u, a, form=None):
    form = _form(a.n, form)
    for f in u.factors:
        if isinstance(f, Torus):
            a = _apply_torus(f, a)
        else:
            a = _apply_exp(f, a, form)
    return a


def weyl_reflection(i):
    """exp(Lambda^ii) exp(-L_ii) exp(Lambda^ii): the simple reflection in the long root i."""
    return GroupElementFactored([Exp(Lam(i, i), 1), Exp(L(i, i), -1), Exp(Lam(i, i), 1)])
