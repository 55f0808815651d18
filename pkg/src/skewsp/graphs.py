"""Marked uni-trivalent graphs and the finite quotients B^(n)_g.

A graph is stored as half-edges.  Each trivalent vertex is a 3-tuple of
half-edge ids in its cyclic order; every univalent vertex is a single
half-edge carrying a marking in 1..g; ``partner`` pairs half-edges into
dashed edges.  Disjoint dashed circles have no half-edges and are counted
separately.

Canonical forms are codes (nested tuples of ints) obtained by minimizing over
vertex orders and slot orders; an odd slot reordering flips the sign (AS).
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .linalg import EchelonBasis
from .pn import _matchings
from .spops import SpgGenerator

MAX_TRIVALENT = 4
MAX_LEGS = 8
MAX_G = 4

_S3 = [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
       ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)]


class GraphGuardError(ValueError):
    pass


class MarkedGraph:
    """One marked uni-trivalent graph (a picture, not yet a class)."""

    __slots__ = ("slots", "partner", "markings", "circles")

    def __init__(self, slots, partner, markings, circles=0):
        self.slots = tuple(tuple(s) for s in slots)
        self.partner = dict(partner)
        self.markings = dict(markings)
        self.circles = circles
        self._validate()

    def _validate(self):
        seen = [h for s in self.slots for h in s]
        if any(len(s) != 3 for s in self.slots):
            raise ValueError("trivalent vertices need exactly three half-edges")
        seen += list(self.markings)
        if len(set(seen)) != len(seen):
            raise ValueError("half-edge used twice")
        if set(seen) != set(self.partner):
            raise ValueError("pairing does not cover the half-edges exactly")
        for h, k in self.partner.items():
            if k == h or self.partner.get(k) != h:
                raise ValueError(f"half-edge {h} is not paired consistently")

    @property
    def internal_degree(self):
        return len(self.slots)

    @property
    def leg_count(self):
        return len(self.markings)

    @property
    def total_degree(self):
        return Fraction(len(self.slots) + len(self.markings), 2)

    def profile(self, g):
        p = [0] * g
        for mk in self.markings.values():
            p[mk - 1] += 1
        return tuple(p)

    def edges(self):
        return sorted((h, k) for h, k in self.partner.items() if h < k)

    @classmethod
    def from_code(cls, code):
        circles, chords, verts = code
        slots, partner, markings = [], {}, {}
        nxt = 3 * len(verts)
        for a, vert in enumerate(verts):
            slots.append((3 * a, 3 * a + 1, 3 * a + 2))
            for s, (kind, x, y) in enumerate(vert):
                h = 3 * a + s
                if kind == 0:
                    partner[h] = 3 * x + y
                else:
                    markings[nxt] = x
                    partner[h], partner[nxt] = nxt, h
                    nxt += 1
        for i, j in chords:
            markings[nxt], markings[nxt + 1] = i, j
            partner[nxt], partner[nxt + 1] = nxt + 1, nxt
            nxt += 2
        return cls(slots, partner, markings, circles)

    def to_json(self):
        return {"vertices": [list(s) for s in self.slots],
                "univalent": [{"id": h, "mark": mk} for h, mk in sorted(self.markings.items())],
                "pairs": [list(e) for e in self.edges()],
                "circles": self.circles}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        partner = {}
        for a, b in data["pairs"]:
            partner[a], partner[b] = b, a
        return cls(data["vertices"], partner,
                   {u["id"]: u["mark"] for u in data["univalent"]}, data.get("circles", 0))


def empty_graph():
    return MarkedGraph((), {}, {})


def chord_graph(*pairs):
    partner, markings = {}, {}
    for k, (i, j) in enumerate(pairs):
        markings[2 * k], markings[2 * k + 1] = i, j
        partner[2 * k], partner[2 * k + 1] = 2 * k + 1, 2 * k
    return MarkedGraph((), partner, markings)


def theta_graph():
    return MarkedGraph([(0, 1, 2), (3, 4, 5)], {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}, {})


def tripod_graph(i, j, k):
    return MarkedGraph([(0, 1, 2)], {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}, {3: i, 4: j, 5: k})


def disjoint_union(a, b):
    shift = 1 + max([h for s in a.slots for h in s] + list(a.markings) + [-1])
    slots = list(a.slots) + [tuple(h + shift for h in s) for s in b.slots]
    partner = dict(a.partner)
    partner.update({h + shift: k + shift for h, k in b.partner.items()})
    markings = dict(a.markings)
    markings.update({h + shift: mk for h, mk in b.markings.items()})
    return MarkedGraph(slots, partner, markings, a.circles + b.circles)


def _vertex_invariant(graph, v, vertex_of):
    out = []
    for h in graph.slots[v]:
        p = graph.partner[h]
        if p in graph.markings:
            out.append((1, graph.markings[p]))
        elif vertex_of[p] == v:
            out.append((2, 0))
        else:
            out.append((0, 0))
    return tuple(sorted(out))


def _vertex_orders(graph, vertex_of):
    m = len(graph.slots)
    inv = [_vertex_invariant(graph, v, vertex_of) for v in range(m)]
    classes = {}
    for v in range(m):
        classes.setdefault(inv[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    for choice in product(*(permutations(gr) for gr in groups)):
        yield [v for part in choice for v in part]


def canonicalize(graph):
    """(code, sign) of the canonical representative; sign 0 when AS forces zero."""
    m = len(graph.slots)
    if m > MAX_TRIVALENT:
        raise GraphGuardError(f"{m} trivalent vertices, guard is {MAX_TRIVALENT}")
    vertex_of = {h: v for v, s in enumerate(graph.slots) for h in s}
    chords = []
    for h, mk in graph.markings.items():
        p = graph.partner[h]
        if p in graph.markings and h < p:
            chords.append(tuple(sorted((mk, graph.markings[p]))))
    chords = tuple(sorted(chords))
    best, signs = None, set()
    for order in _vertex_orders(graph, vertex_of):
        for sigmas in product(_S3, repeat=m):
            pos = {}
            sign = 1
            for a, v in enumerate(order):
                perm, s = sigmas[a]
                sign *= s
                for k, idx in enumerate(perm):
                    pos[graph.slots[v][idx]] = (a, k)
            verts = []
            for a, v in enumerate(order):
                perm, _ = sigmas[a]
                row = []
                for idx in perm:
                    p = graph.partner[graph.slots[v][idx]]
                    if p in graph.markings:
                        row.append((1, graph.markings[p], 0))
                    else:
                        row.append((0,) + pos[p])
                verts.append(tuple(row))
            code = tuple(verts)
            if best is None or code < best:
                best, signs = code, {sign}
            elif code == best:
                signs.add(sign)
    code = (graph.circles, chords, best if best is not None else ())
    if len(signs) > 1:
        return code, 0
    return code, (signs.pop() if signs else 1)


class GraphVector:
    """Finite combination of canonical graph classes, with O_n applied.

    Keys are circle-free canonical codes.  Each dashed circle contributes a
    factor -2n, so ``n`` must be known.
    """

    def __init__(self, g, n, terms=None):
        self.g = g
        self.n = n
        self.terms = {}
        for code, c in (terms or {}).items():
            if c:
                self.terms[code] = self.terms.get(code, 0) + Fraction(c)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def of(cls, g, n, graph, coef=1):
        out = cls(g, n)
        out.add_graph(graph, coef)
        return out

    def add_graph(self, graph, coef=1):
        code, sign = canonical(graph)
        if not sign:
            return
        circles = code[0]
        c = Fraction(coef) * sign * (-2 * self.n) ** circles
        if not c:
            return
        key = (0,) + code[1:]
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def _check(self, other):
        if (self.g, self.n) != (other.g, other.n):
            raise ValueError(f"context mismatch {(self.g, self.n)} vs {(other.g, other.n)}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GraphVector(self.g, self.n, out)

    def __neg__(self):
        return GraphVector(self.g, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return GraphVector(self.g, self.n, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, GraphVector) and (self.g, self.n) == (other.g, other.n)
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GraphVector({self.terms})"

    def graphs(self):
        for code, c in sorted(self.terms.items()):
            yield MarkedGraph.from_code(code), c


def canonical(graph):
    return _canonical_cached(_raw_key(graph))


def _raw_key(graph):
    # relabel half-edges densely so structurally identical pictures share a cache slot
    ids = {}
    for s in graph.slots:
        for h in s:
            ids[h] = len(ids)
    for h in sorted(graph.markings):
        ids[h] = len(ids)
    slots = tuple(tuple(ids[h] for h in s) for s in graph.slots)
    marks = tuple(graph.markings[h] for h in sorted(graph.markings))
    partner = tuple(ids[graph.partner[h]] for h in sorted(ids, key=ids.get))
    return slots, marks, partner, graph.circles


@lru_cache(maxsize=1 << 18)
def _canonical_cached(key):
    slots, marks, partner, circles = key
    nslots = 3 * len(slots)
    markings = {nslots + k: mk for k, mk in enumerate(marks)}
    return canonicalize(MarkedGraph(slots, dict(enumerate(partner)), markings, circles))


def block_key(code, g):
    """(internal degree, leg profile) of a canonical code."""
    _, chords, verts = code
    p = [0] * g
    for i, j in chords:
        p[i - 1] += 1
        p[j - 1] += 1
    for vert in verts:
        for kind, x, _ in vert:
            if kind == 1:
                p[x - 1] += 1
    return len(verts), tuple(p)


# graph moves

def _fresh(graph, k=1):
    top = max([h for s in graph.slots for h in s] + list(graph.markings) + [-1])
    return list(range(top + 1, top + 1 + k))


def add_chord(graph, i, j):
    a, b = _fresh(graph, 2)
    partner = dict(graph.partner)
    partner[a], partner[b] = b, a
    markings = dict(graph.markings)
    markings[a], markings[b] = i, j
    return MarkedGraph(graph.slots, partner, markings, graph.circles)


def relabel(graph, h, j):
    markings = dict(graph.markings)
    markings[h] = j
    return MarkedGraph(graph.slots, graph.partner, markings, graph.circles)


def join_legs(graph, a, b):
    """Remove univalent vertices a, b and splice the dashed lines that ended on them."""
    partner = dict(graph.partner)
    markings = dict(graph.markings)
    pa, pb = partner.pop(a), partner.pop(b)
    del markings[a], markings[b]
    circles = graph.circles
    if pa == b:
        circles += 1
    else:
        partner[pa], partner[pb] = pb, pa
    return MarkedGraph(graph.slots, partner, markings, circles)


LAMBDA_DIAGONAL = Fraction(-1, 2)
LAMBDA_OFFDIAGONAL = Fraction(-1, 4)


def _legs(graph, i):
    return sorted(h for h, mk in graph.markings.items() if mk == i)


def graph_move(gen, graph, lambda_diagonal=LAMBDA_DIAGONAL):
    """Yield (coefficient, graph) pairs for one sp(g) generator on one picture."""
    if gen.kind == "L":
        yield Fraction(1), add_chord(graph, gen.i, gen.j)
    elif gen.kind == "H":
        # h^i_j relabels each i-marked univalent vertex to j
        for h in _legs(graph, gen.i):
            yield Fraction(1), relabel(graph, h, gen.j)
    else:
        i, j = gen.i, gen.j
        if i == j:
            for a, b in combinations(_legs(graph, i), 2):
                yield lambda_diagonal, join_legs(graph, a, b)
        else:
            for a in _legs(graph, i):
                for b in _legs(graph, j):
                    yield LAMBDA_OFFDIAGONAL, join_legs(graph, a, b)


def graph_action(gen, v, lambda_diagonal=LAMBDA_DIAGONAL):
    out = GraphVector(v.g, v.n)
    if max(gen.i, gen.j) > v.g:
        raise ValueError(f"generator {gen} outside g={v.g}")
    for graph, c in v.graphs():
        for coef, image in graph_move(gen, graph, lambda_diagonal):
            out.add_graph(image, c * coef)
    return out


def apply_word(expr, v, lambda_diagonal=LAMBDA_DIAGONAL):
    """Apply an OperatorExpr of SpgGenerators (words act right to left)."""
    out = GraphVector(v.g, v.n)
    for word, c in expr.terms.items():
        w = v
        for letter in reversed(word):
            w = graph_action(letter, w, lambda_diagonal)
        out = out + w * c
    return out


# relations

def _check_block(g, n, m, profile):
    if g > MAX_G:
        raise GraphGuardError(f"g={g}, guard is {MAX_G}")
    if m > MAX_TRIVALENT:
        raise GraphGuardError(f"{m} trivalent vertices, guard is {MAX_TRIVALENT}")
    if sum(profile) > MAX_LEGS:
        raise GraphGuardError(f"{sum(profile)} legs, guard is {MAX_LEGS}")
    if len(profile) != g:
        raise ValueError(f"profile {profile} does not have length {g}")


def _pictures(m, profile):
    """One picture per isomorphism class (zero classes included), keyed by code."""
    slots = [(3 * v, 3 * v + 1, 3 * v + 2) for v in range(m)]
    marks = [i + 1 for i, c in enumerate(profile) for _ in range(c)]
    base = 3 * m
    legs = {base + k: mk for k, mk in enumerate(marks)}
    half = list(range(base + len(marks)))
    out = {}
    for pairing in _restricted_matchings(half, legs):
        partner = {}
        for a, b in pairing:
            partner[a], partner[b] = b, a
        graph = MarkedGraph(slots, partner, legs)
        code, sign = canonical(graph)
        if code not in out:
            out[code] = (graph, sign)
    return out


def _restricted_matchings(half, legs):
    """Perfect matchings modulo permuting equally marked univalent vertices."""
    def rec(items):
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        used_marks = set()
        for idx, other in enumerate(rest):
            if other in legs:
                if legs[other] in used_marks:
                    continue
                used_marks.add(legs[other])
            remaining = rest[:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((first, other),) + tail
    if len(half) % 2:
        return
    yield from rec(tuple(half))


def ihx_terms(graph, h):
    """The three Jacobi terms for the internal edge through half-edge h."""
    k = graph.partner[h]
    vertex_of = {x: v for v, s in enumerate(graph.slots) for x in s}
    if h in graph.markings or k in graph.markings or vertex_of[h] == vertex_of[k]:
        raise ValueError("IHX needs an edge between two distinct trivalent vertices")
    u, v = vertex_of[h], vertex_of[k]
    su = graph.slots[u]
    sv = graph.slots[v]
    ru = su.index(h)
    rv = sv.index(k)
    a, b = su[(ru + 1) % 3], su[(ru + 2) % 3]
    c, d = sv[(rv + 1) % 3], sv[(rv + 2) % 3]
    out = []
    for (x, y), (z, w) in (((a, b), (c, d)), ((b, c), (a, d)), ((c, a), (b, d))):
        slots = list(graph.slots)
        slots[u] = (h, x, y)
        slots[v] = (k, z, w)
        out.append(MarkedGraph(slots, graph.partner, graph.markings, graph.circles))
    return out


def p_relation_terms(graph, edges):
    """Re-pair the 2n+2 half-edges freed by cutting ``edges`` in every way."""
    ends = [x for e in edges for x in e]
    base = dict(graph.partner)
    for x in ends:
        del base[x]
    out = []
    for pairing in _matchings(tuple(ends)):
        partner = dict(base)
        for a, b in pairing:
            partner[a], partner[b] = b, a
        out.append(MarkedGraph(graph.slots, partner, graph.markings, graph.circles))
    return out


def generate_relations(family, g, n, internal_degree, leg_profile):
    """Relations of one family inside the block (internal degree, leg profile)."""
    leg_profile = tuple(leg_profile)
    _check_block(g, n, internal_degree, leg_profile)
    if family == "AS":
        out = []
        for code, (graph, _) in sorted(_pictures(internal_degree, leg_profile).items()):
            if graph.slots:
                slots = list(graph.slots)
                a, b, c = slots[0]
                slots[0] = (a, c, b)
                flip = MarkedGraph(slots, graph.partner, graph.markings)
                out.append(GraphVector.of(g, n, graph) + GraphVector.of(g, n, flip))
        return out
    if family == "IHX":
        out = []
        for code, (graph, _) in sorted(_pictures(internal_degree, leg_profile).items()):
            for h, k in graph.edges():
                if h in graph.markings or k in graph.markings:
                    continue
                if _same_vertex(graph, h, k):
                    continue
                vec = GraphVector(g, n)
                for term in ihx_terms(graph, h):
                    vec.add_graph(term)
                out.append(vec)
        return out
    if family == "P":
        out = []
        for code, (graph, _) in sorted(_pictures(internal_degree, leg_profile).items()):
            for edges in combinations(graph.edges(), n + 1):
                vec = GraphVector(g, n)
                for term in p_relation_terms(graph, edges):
                    vec.add_graph(term)
                out.append(vec)
        return out
    if family == "O":
        # circle (x) D minus (-2n) D, stated on pictures that keep the circle
        out = []
        for code, (graph, _) in sorted(_pictures(internal_degree, leg_profile).items()):
            with_circle = MarkedGraph(graph.slots, graph.partner, graph.markings, 1)
            out.append((with_circle, Fraction(-2 * n), graph))
        return out
    if family == "cutoff":
        if internal_degree > 2 * n:
            return [GraphVector.of(g, n, gr) for gr, s in
                    _pictures(internal_degree, leg_profile).values() if s]
        return []
    raise ValueError(f"unknown relation family {family!r}")


def _same_vertex(graph, h, k):
    for s in graph.slots:
        if h in s and k in s:
            return True
    return False


class Block:
    """Spanning classes of one (internal degree, profile) block and its relation span."""

    def __init__(self, g, n, m, profile):
        self.g, self.n, self.m, self.profile = g, n, m, tuple(profile)
        pictures = _pictures(m, self.profile)
        self.basis = sorted((0,) + code[1:] for code, (_, s) in pictures.items() if s)
        self.index = {code: k for k, code in enumerate(self.basis)}
        self.relations = EchelonBasis()
        if m > 2 * n:
            for k in range(len(self.basis)):
                self.relations.add({k: 1})
            return
        for family in ("IHX", "P"):
            for vec in generate_relations(family, g, n, m, self.profile):
                self.relations.add(self.row(vec))

    def row(self, vec):
        out = {}
        for code, c in vec.terms.items():
            if code not in self.index:
                raise KeyError(f"graph {code} outside block {self.m, self.profile}")
            out[self.index[code]] = c
        return out

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def rank(self):
        return len(self.basis) - self.relations.rank

    def is_zero(self, vec):
        return self.relations.contains(self.row(vec))


_BLOCKS = {}


def get_block(g, n, m, profile):
    key = (g, n, m, tuple(profile))
    if key not in _BLOCKS:
        _check_block(g, n, m, tuple(profile))
        _BLOCKS[key] = Block(g, n, m, profile)
    return _BLOCKS[key]


def profiles(g, max_legs, parity=None):
    for p in product(range(max_legs + 1), repeat=g):
        if sum(p) <= max_legs and (parity is None or sum(p) % 2 == parity):
            yield p


def _block_rank(args):
    return get_block(*args).rank


def _threads():
    try:
        return max(1, int(os.environ.get("SKEWSP_THREADS", "1")))
    except ValueError:
        return 1


def block_ranks(g, n, m, max_legs=None):
    """Map profile -> quotient rank for every block with at most max_legs legs."""
    if max_legs is None:
        max_legs = 2 * n * g
    if m > 2 * n:
        return {}
    jobs = [(g, n, m, p) for p in profiles(g, max_legs, (3 * m) % 2)]
    threads = _threads()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            ranks = list(pool.map(_block_rank, jobs))
    else:
        ranks = [_block_rank(j) for j in jobs]
    return {j[3]: r for j, r in zip(jobs, ranks)}


def quotient_rank(g, n, internal_degree, max_legs=None):
    """dim of B^(n)_g in the given internal degree, legs capped at max_legs (default 2ng)."""
    return sum(block_ranks(g, n, internal_degree, max_legs).values())


def reduce_in_quotient(vec):
    """True when vec vanishes in B^(n)_g (checked block by block)."""
    parts = {}
    for code, c in vec.terms.items():
        parts.setdefault(block_key(code, vec.g), {})[code] = c
    for (m, p), terms in parts.items():
        if m > 2 * vec.n:
            continue
        if not get_block(vec.g, vec.n, m, p).is_zero(GraphVector(vec.g, vec.n, terms)):
            return False
    return True


def parity_admissible(q, legs):
    """Whether a graph with internal degree q and |p| = legs can be nonzero."""
    if (3 * q + legs) % 2:
        return False
    if q == 1 and legs == 1:
        return False
    return True


def spanning_set(g, n, max_legs=None):
    """Nonzero canonical classes over all blocks with internal degree <= 2n."""
    if max_legs is None:
        max_legs = 2 * n * g
    out = []
    for m in range(2 * n + 1):
        for p in profiles(g, max_legs, (3 * m) % 2):
            out.extend(get_block(g, n, m, p).basis)
    return out


def check_graph_relations(g, n, relations, max_legs=None, lambda_diagonal=LAMBDA_DIAGONAL,
                          stop_at_first=False):
    """Evaluate (label, lhs, rhs) operator relations on each spanning class.

    A residual that is nonzero as a graph combination is still accepted when it
    vanishes in the quotient.  Returns the list of (label, code) failures.
    """
    failures = []
    for code in spanning_set(g, n, max_legs):
        v = GraphVector(g, n, {code: 1})
        for label, lhs, rhs in relations:
            res = apply_word(lhs, v, lambda_diagonal) - apply_word(rhs, v, lambda_diagonal)
            if res and not reduce_in_quotient(res):
                failures.append((label, code))
                if stop_at_first:
                    return failures
    return failures


def check_well_defined(g, n, gens, max_legs):
    """Images of every relation of every block under each generator vanish in the quotient."""
    failures = []
    for m in range(2 * n + 1):
        for p in profiles(g, max_legs, (3 * m) % 2):
            for family in ("IHX", "P"):
                for rel in generate_relations(family, g, n, m, p):
                    for gen in gens:
                        img = graph_action(gen, rel)
                        if img and not reduce_in_quotient(img):
                            failures.append((family, m, p, gen))
    return failures


def highest_weight_check(g, n, internal_degree):
    """Raising operators kill the candidate and H_i = n - h^i_i acts diagonally.

    Returns a dict with the candidate, whether each raising operator kills it,
    the H eigenvalues (or None when not an eigenvector) and, for the empty
    graph, whether L_gg^{n+1} kills it.
    """
    if internal_degree == 0:
        candidate = GraphVector.of(g, n, empty_graph())
    elif internal_degree == 1:
        if g < 3:
            raise GraphGuardError("the internal degree 1 candidate needs g >= 3")
        candidate = GraphVector.of(g, n, tripod_graph(g - 2, g - 1, g))
    else:
        raise ValueError("internal degree must be 0 or 1")
    raising = [SpgGenerator("H", i, i + 1) for i in range(1, g)] + [SpgGenerator("Lambda", g, g)]
    killed = {str(x): reduce_in_quotient(graph_action(x, candidate)) for x in raising}
    weights = []
    for i in range(1, g + 1):
        hv = graph_action(SpgGenerator("H", i, i), candidate)
        lam = None
        for c in range(0, 2 * n * g + 1):
            if reduce_in_quotient(hv - candidate * c):
                lam = n - c
                break
        weights.append(lam)
    report = {"killed_by_raising": killed, "weights": weights}
    if internal_degree == 0:
        v = candidate
        for _ in range(n + 1):
            v = graph_action(SpgGenerator("L", g, g), v)
        report["lowering_power_vanishes"] = reduce_in_quotient(v)
    report["passed"] = all(killed.values()) and None not in weights and (
        report.get("lowering_power_vanishes", True))
    return report
