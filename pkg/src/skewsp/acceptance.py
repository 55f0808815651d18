"""The acceptance suite: one function per criterion, each returning a Result.

Shared by ``skewsp selftest`` and the test suite so both check the same thing.
"""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import genus, graphs, k3, pn, reps, spops
from .exalg import SymplecticForm

RELATION_CONTEXTS = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]
INVARIANT_CONTEXTS = [(1, 1), (1, 2), (2, 1)]


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number}: {status}  {self.title} ({self.seconds:.1f}s)"

    def to_json(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "details": self.details}


def _timed(number, title, body):
    start = time.perf_counter()
    passed, details = body()
    return Result(number, title, passed, time.perf_counter() - start, details)


def relations_hold(form_for=None):
    """Every bracket relation is the zero operator on each context; form_for(n) picks eps."""
    failures = {}
    for n, g in RELATION_CONTEXTS:
        form = form_for(n) if form_for else None
        report = spops.check_sp_relations(n, g, form)
        if not report.passed:
            failures[f"{n},{g}"] = report.failures()[:5]
    return failures


def criterion_1():
    def body():
        failures = relations_hold()
        return not failures, {"contexts": len(RELATION_CONTEXTS), "failures": failures}
    return _timed(1, "sp(g) relations vanish exactly as operators", body)


def criterion_2():
    def body():
        failures = {}
        for n, g in RELATION_CONTEXTS:
            report = spops.check_commuting_actions(n, g)
            if not report.passed:
                failures[f"{n},{g}"] = report.failures()[:5]
        return not failures, {"failures": failures}
    return _timed(2, "sp(V) and sp(g) commute", body)


def criterion_3():
    def body():
        details = {}
        ok = True
        for n in range(1, 4):
            for g in range(1, 4):
                total = sum(t.dim_spV * t.dim_spg for t in reps.enumerate_decomposition(n, g))
                if total != 2 ** (2 * n * g):
                    ok = False
                    details[f"decomposition {n},{g}"] = total
        for n, g in INVARIANT_CONTEXTS:
            kernel = spops.invariant_subspace(n, g).total
            expected = reps.sp_irrep_dim(g, (n,) * g)
            details[f"invariants {n},{g}"] = [kernel, expected]
            ok &= kernel == expected
        ok &= details["invariants 1,1"][0] == 2 and details["invariants 1,2"][0] == 5
        return ok, details
    return _timed(3, "decomposition dimensions and invariant kernels", body)


def criterion_4():
    def body():
        details = {}
        ok = True
        for n, g in INVARIANT_CONTEXTS:
            top = n * g + 1
            quotient = pn.quotient_graded_dims(n, g, top).quotient_dims
            predicted = reps.invariant_graded_dims(n, g, 2 * top)
            kernel = spops.invariant_subspace(n, g).dims_by_total_degree()
            as_lambda = {2 * d: q for d, q in quotient.items()}
            match = all(as_lambda.get(d, 0) == predicted.get(d, 0) == kernel.get(d, 0)
                        for d in range(2 * top + 1))
            annihilates = pn.realize_and_check_annihilation(n, g)
            witness = pn.find_nonvanishing(n, g, n)
            details[f"{n},{g}"] = {"quotient": quotient, "annihilates": annihilates,
                                   "witness_word": witness[0] if witness else None}
            ok &= match and annihilates and witness is not None
        return ok, details
    return _timed(4, "P_{n+1} quotient matches invariants; P_{n+1} annihilates", body)


def criterion_5():
    def body():
        bad = []
        for n in range(1, 4):
            for g in range(1, 3):
                for qs, (got, want) in genus.cstring_identity(n, g).items():
                    if got != want:
                        bad.append([n, g, list(qs), repr(got)])
        return not bad, {"mismatches": bad}
    result = _timed(5, "top (1 - y) coefficients are Chern monomials", body)
    result.passed &= result.seconds < 30
    return result


def criterion_6():
    def body():
        details = {}
        rr = [genus.evaluate_surface_rr(m) for m in range(9)]
        details["rr"] = rr
        ok = rr == [2 ** (m + 1) * (1 - 6 * m) for m in range(9)]
        t1 = k3.build_k3_table(1)
        diamond = {(p, q): t1[((p,), q)] for p in range(3) for q in range(3)}
        ok &= diamond == {(0, 0): 1, (0, 1): 0, (0, 2): 1, (1, 0): 0, (1, 1): 20,
                          (1, 2): 0, (2, 0): 1, (2, 1): 0, (2, 2): 1}
        m232 = reps.multiplicity(k3.build_k3_table(3), 1, (0, 0, 0))
        direct = k3.k3_pluri_hodge((1, 1, 1), 1) - 2 * k3.k3_pluri_hodge((1,), 1)
        details["232"] = [m232, direct]
        ok &= m232 == direct == 232
        for g in range(1, 4):
            table = k3.build_k3_table(g)
            st = k3.supertrace(k3.TorusElement(g), table).shift((1,) * g)
            ok &= st.terms == genus.genus_from_table(table).terms
        e = genus.genus_from_table(t1).evaluate([1])
        details["genus at y=1"] = str(e)
        ok &= e == 24
        return ok, details
    return _timed(6, "K3 Riemann-Roch, Hodge diamond, 232, supertrace", body)


def criterion_7(seed=20240601, tables=200):
    def body():
        rng = random.Random(seed)
        bad = 0
        for _ in range(tables):
            g = rng.choice((1, 2))
            n = rng.randint(1, 3)
            table = reps.random_dual_table(n, g, rng)
            for q in table.qs():
                for p in range(n + 1):
                    a = (n,) * (g - 1) + (n - p,)
                    bad += reps.multiplicity(table, q, a) != reps.multiplicity_closed_form_last(
                        table, q, p)
                if g == 2:
                    for p1 in range(n + 1):
                        for p2 in range(p1, n + 1):
                            bad += reps.multiplicity(table, q, (n - p1, n - p2)) != \
                                reps.multiplicity_closed_form_sp2(table, q, p1, p2)
        negative = []
        for g in range(1, 4):
            table = k3.build_k3_table(g)
            for a in reps.partitions_in_box(g, 2):
                a = tuple(a) + (0,) * (g - len(a))
                for q in range(3):
                    for parity in ("+", "-", "both"):
                        m = reps.multiplicity(table, q, a, parity=parity)
                        if m < 0:
                            negative.append([g, list(a), q, parity, m])
        return not bad and not negative, {"closed_form_mismatches": bad, "negative": negative}
    return _timed(7, "Weyl-sum multiplicities: closed forms and K3 positivity", body)


def graph_relations_hold(gmax=3, lambda_diagonal=graphs.LAMBDA_DIAGONAL):
    for g in range(1, gmax + 1):
        if graphs.check_graph_relations(g, 1, spops.sp_relations(1, g),
                                        lambda_diagonal=lambda_diagonal, stop_at_first=True):
            return False
    return True


def criterion_8():
    def body():
        details = {"B1_1_0": graphs.quotient_rank(1, 1, 0), "B1_2_0": graphs.quotient_rank(2, 1, 0)}
        ok = details["B1_1_0"] == 2 and details["B1_2_0"] == 5
        for g in range(1, 4):
            r0, r2 = graphs.block_ranks(g, 1, 0), graphs.block_ranks(g, 1, 2)
            details[f"B1_{g}_0 vs B1_{g}_2"] = [sum(r0.values()), sum(r2.values())]
            ok &= r0 == r2
        ok &= graph_relations_hold(3)
        parity_ok = True
        for q in range(4):
            for legs in range(7):
                want = not ((3 * q + legs) % 2 or (q == 1 and legs == 1))
                parity_ok &= graphs.parity_admissible(q, legs) == want
                if q <= 2 and (3 * q + legs) % 2 == 0:
                    # some nonzero class must exist exactly when admissible
                    exists = any(graphs.get_block(3, 1, q, p).dimension
                                 for p in graphs.profiles(3, legs) if sum(p) == legs)
                    parity_ok &= exists == want
        details["parity"] = parity_ok
        ok &= parity_ok
        hw = [graphs.highest_weight_check(g, 1, 0)["passed"] for g in (1, 2, 3)]
        hw.append(graphs.highest_weight_check(3, 1, 1)["passed"])
        details["highest_weight"] = hw
        ok &= all(hw)
        return ok, details
    return _timed(8, "graph quotients, graph action and highest weights", body)


def criterion_9():
    def body():
        flipped = relations_hold(lambda n: SymplecticForm.standard(n).flipped(1, n + 1))
        quarter = graph_relations_hold(1, Fraction(-1, 4))
        details = {"flipped_eps_detected": bool(flipped), "quarter_lambda_detected": not quarter}
        return bool(flipped) and not quarter, details
    return _timed(9, "mutations are detected", body)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def run_all(select=None):
    return [c() for k, c in enumerate(CRITERIA, start=1) if select is None or k in select]
