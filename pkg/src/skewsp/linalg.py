"""Exact sparse linear algebra over the rationals.

Rows are plain dicts ``{column: value}``.  Elimination is fraction free:
incoming rows are scaled to primitive integer vectors and combined with
integer multipliers, so ranks and kernels never depend on a pivot tolerance.
"""

from fractions import Fraction
from math import gcd, lcm


def primitive(row):
    """Scale a rational row to a primitive integer row with positive leading entry."""
    row = {k: v for k, v in row.items() if v}
    if not row:
        return {}
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = {k: int(v * den) for k, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if ints[min(ints)] < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


def _eliminate(row, pivot_row, col):
    # row := p*row - r*pivot, with p, r the entries in `col`
    p = pivot_row[col]
    r = row[col]
    g = gcd(p, r)
    a, b = p // g, r // g
    out = {k: a * v for k, v in row.items()}
    for k, v in pivot_row.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class EchelonBasis:
    """Incrementally maintained echelon form of a row space."""

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        """Residual of ``row`` modulo the span, up to a nonzero scalar.

        The residual is zero exactly when ``row`` lies in the span.
        """
        row = primitive(row)
        last = -1
        while row:
            cands = [k for k in row if k > last and k in self.pivots]
            if not cands:
                break
            last = min(cands)
            row = _eliminate(row, self.pivots[last], last)
        return primitive(row)

    def add(self, row):
        """Insert a row; return True when it enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def extend(self, rows):
        for row in rows:
            self.add(row)
        return self

    def contains(self, row):
        return not self.reduce(row)

    def rref(self):
        """Fully reduced rows, keyed by pivot column, as primitive integer dicts."""
        done = {}
        for col in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[col])
            for c in sorted(k for k in row if k != col and k in done):
                if c in row:
                    row = _eliminate(row, done[c], c)
            done[col] = primitive(row)
        return done


def rank(rows):
    return EchelonBasis().extend(rows).rank


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}`` as a list of Fraction dicts.

    Columns are ``0 .. ncols-1``; each basis vector has a 1 in its own free
    column and zeros in the other free columns.
    """
    reduced = EchelonBasis().extend(rows).rref()
    free = [c for c in range(ncols) if c not in reduced]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for col, row in reduced.items():
            if f in row:
                vec[col] = Fraction(-row[f], row[col])
        basis.append(vec)
    return basis


def matmul(a, b):
    """Compose sparse matrices stored column-wise: ``a[col] = {row: value}``.

    Returns the matrix of ``a o b`` (apply ``b`` first).
    """
    out = {}
    for col, bcol in b.items():
        acc = {}
        for mid, v in bcol.items():
            for row, w in a.get(mid, {}).items():
                s = acc.get(row, 0) + v * w
                if s:
                    acc[row] = s
                else:
                    acc.pop(row, None)
        if acc:
            out[col] = acc
    return out


def matadd(*terms):
    """Linear combination of column-wise sparse matrices given as ``(coef, matrix)`` pairs."""
    out = {}
    for coef, m in terms:
        if not coef:
            continue
        for col, c in m.items():
            acc = out.setdefault(col, {})
            for row, v in c.items():
                s = acc.get(row, 0) + coef * v
                if s:
                    acc[row] = s
                else:
                    acc.pop(row, None)
    return {k: v for k, v in out.items() if v}


def inverse(matrix):
    """Exact inverse of a dense square matrix of rationals (Gauss-Jordan)."""
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(matrix)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]
