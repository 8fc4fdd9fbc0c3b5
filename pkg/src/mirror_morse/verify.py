"""Verification suites: the exact structural claims and the float checks.

Each item returns a report dict {check, params, ..., pass}; the CLI prints
one line per report and fails if any report fails.  Random data is drawn
from a fixed seed so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations_with_replacement

from . import category, dg, flow, lagrangian, table
from .exact import PosExact
from .polytope import ProductPolytope

SEED = 2024


def _spaces_for(n_max: int) -> list[tuple[str, list[tuple[int, int]]]]:
    """Spaces with their full exceptional ranges, capped by total dimension."""
    spaces = [("P1", [(0, 1)])]
    if n_max >= 2:
        spaces += [("P2", [(0, 2)]), ("P1xP1", [(0, 1), (0, 1)])]
    if n_max >= 3:
        spaces += [("P3", [(0, 3)]), ("P1xP2", [(0, 1), (0, 2)])]
    return spaces


def hom_rank_report(n_max: int) -> dict:
    failures = []
    for n in range(1, min(3, n_max) + 1):
        for a in range(0, n + 3):
            for b in range(a, n + 3):
                got = len(lagrangian.hom_indices(a, b, n))
                want = math.comb(b - a + n, n)
                if got != want:
                    failures.append({"n": n, "a": a, "b": b, "got": got, "want": want})
        for gap in range(1, 2 * n + 4):
            gens = lagrangian.hom_indices(gap, 0, n)
            want = math.comb(gap - 1, n) if gap >= n + 1 else 0
            if len(gens) != want or any(d != n for _, _, d in gens):
                failures.append({"n": n, "a": gap, "b": 0, "got": len(gens), "want": want})
    return {"check": "hom-ranks", "params": {"n_max": min(3, n_max)},
            "failures": failures, "pass": not failures}


def worked_constants_report() -> dict:
    P1 = ProductPolytope([1])
    P2 = ProductPolytope([2])

    def gen(P, L, M, index):
        for g in category.hom_space(P, L, M).generators:
            if g.index == index:
                return g
        raise LookupError(index)

    cases = [
        (P1, (0,), (1,), (0,), (1,), (2,), (1,), PosExact.from_rational(Fraction(1, 2))),
        (P2, (0,), (1,), (1, 0), (1,), (2,), (0, 1), PosExact.from_rational(Fraction(1, 2))),
        (P1, (0,), (2,), (1,), (2,), (3,), (1,), PosExact({2: 2, 3: Fraction(-3, 2)})),
    ]
    failures = []
    for P, a, b, I, bb, c, K, want in cases:
        sc = category.compose(gen(P, a, b, I), gen(P, bb, c, K))
        expected_index = tuple(i + k for i, k in zip(I, K))
        if sc.weight != want or sc.generator.index != expected_index:
            failures.append({"space": P.descriptor(), "labels": [a, bb, c],
                             "weight": sc.weight.json_dict()})
    return {"check": "worked-constants", "params": {}, "failures": failures,
            "pass": not failures}


def table_report(space: str, ranges) -> dict:
    P = ProductPolytope.from_descriptor(space)
    objects = table.lexicographic_collection(ranges)
    morse = table.build_table(P, objects, "morse")
    dgt = table.build_table(P, objects, "dg")
    diffs = table.table_diff(morse, dgt)
    exc = dg.exceptional_check(objects, P.dims)
    return {
        "check": "structure-table",
        "params": {"space": space, "objects": [list(o) for o in objects]},
        "differences": diffs[:20],
        "n_products": len(morse["products"]),
        "exceptional": exc["pass"],
        "pass": not diffs and exc["pass"],
    }


def grading_report(space: str, ranges) -> dict:
    P = ProductPolytope.from_descriptor(space)
    objects = table.lexicographic_collection(ranges)
    failures = []
    checked = 0
    for L in objects:
        for M in objects:
            if any(a > b for a, b in zip(L, M)):
                continue
            for N in objects:
                if any(b > c for b, c in zip(M, N)):
                    continue
                for u in category.hom_space(P, L, M).by_degree(0):
                    for v in category.hom_space(P, M, N).by_degree(0):
                        checked += 1
                        sc = category.compose(u, v)
                        idx_ok = sc.generator.index == tuple(
                            i + k for i, k in zip(u.index, v.index))
                        deg_ok = sc.generator.degree == u.degree + v.degree
                        if not (idx_ok and deg_ok):
                            failures.append({"left": list(u.index), "right": list(v.index)})
    return {"check": "grading-additivity", "params": {"space": space},
            "pairs": checked, "failures": failures, "pass": not failures}


def segment_law_report(space: str, ranges) -> dict:
    P = ProductPolytope.from_descriptor(space)
    objects = table.lexicographic_collection(ranges)
    failures = []
    checked = 0
    for L in objects:
        for M in objects:
            if any(a > b for a, b in zip(L, M)):
                continue
            for N in objects:
                if any(b > c for b, c in zip(M, N)):
                    continue
                for u in category.hom_space(P, L, M).by_degree(0):
                    for v in category.hom_space(P, M, N).by_degree(0):
                        tree = category.gradient_tree(u, v)
                        for k, t in enumerate(tree.factor_trees):
                            if t.kind != "point":
                                continue
                            checked += 1
                            a, b, c = L[k], M[k], N[k]
                            lam = Fraction(b - a, c - a)
                            expect = tuple(lam * p + (1 - lam) * q
                                           for p, q in zip(t.v_ab, t.v_bc))
                            if t.v_ac != expect or t.lam != lam:
                                failures.append({"triple": [list(L), list(M), list(N)],
                                                 "factor": k})
    return {"check": "segment-law", "params": {"space": space},
            "point_factors": checked, "failures": failures, "pass": not failures}


def associativity_report(space: str, labels) -> dict:
    """All 4-chains (with repeats) over a single-factor space."""
    P = ProductPolytope.from_descriptor(space)
    if len(P.factors) != 1:
        raise ValueError("associativity sweep is stated for one-factor spaces")
    failures = []
    triples = 0
    for chain in combinations_with_replacement(sorted(labels), 4):
        rep = category.associativity_check(P, [(x,) for x in chain])
        triples += rep["triples"]
        failures.extend(rep["failures"])
    return {"check": "associativity", "params": {"space": space, "labels": list(labels)},
            "triples": triples, "failures": failures[:10], "pass": not failures}


def higher_products_report(space: str, ranges) -> dict:
    P = ProductPolytope.from_descriptor(space)
    objects = table.lexicographic_collection(ranges)
    failures = []
    counted = {3: 0, 4: 0}
    for arity in (3, 4):
        for chain in combinations_with_replacement(objects, arity + 1):
            ok = all(all(x <= y for x, y in zip(chain[i], chain[i + 1]))
                     for i in range(arity))
            if not ok:
                continue
            spaces = [category.hom_space(P, chain[i], chain[i + 1]).by_degree(0)
                      for i in range(arity)]
            combos = [[]]
            for gens in spaces:
                combos = [pre + [g] for pre in combos for g in gens]
            for gens in combos:
                counted[arity] += 1
                zp = category.higher_product(gens)
                if not zp.is_zero or zp.required_degree != 2 - arity:
                    failures.append({"arity": arity,
                                     "chain": [list(o) for o in chain]})
    return {"check": "higher-products", "params": {"space": space},
            "tuples": counted, "failures": failures, "pass": not failures}


def identity_report(space: str, ranges) -> dict:
    P = ProductPolytope.from_descriptor(space)
    objects = table.lexicographic_collection(ranges)
    failures = []
    for L in objects:
        for M in objects:
            if any(a > b for a, b in zip(L, M)):
                continue
            e_src = category.identity_generator(P, L)
            e_tgt = category.identity_generator(P, M)
            for g in category.hom_space(P, L, M).by_degree(0):
                left = category.compose(e_src, g)
                right = category.compose(g, e_tgt)
                if left.generator != g or not left.weight.is_one():
                    failures.append({"side": "left", "pair": [list(L), list(M)]})
                if right.generator != g or not right.weight.is_one():
                    failures.append({"side": "right", "pair": [list(L), list(M)]})
    return {"check": "identity-unit", "params": {"space": space},
            "failures": failures, "pass": not failures}


def exact_suite(n_max: int) -> list[dict]:
    reports = [hom_rank_report(n_max), worked_constants_report()]
    for space, ranges in _spaces_for(n_max):
        reports.append(table_report(space, ranges))
        reports.append(grading_report(space, ranges))
        reports.append(segment_law_report(space, ranges))
        P = ProductPolytope.from_descriptor(space)
        objects = table.lexicographic_collection(ranges)
        reports.append(category.boundary_report(P, objects))
        reports.append(higher_products_report(space, ranges))
        reports.append(identity_report(space, ranges))
    reports.append(associativity_report("P1", range(0, 4)))
    if n_max >= 2:
        reports.append(associativity_report("P2", range(0, 4)))
    return reports


# -- numeric side --------------------------------------------------------------

def legendre_suite(n_max: int, samples: int = 100) -> dict:
    rng = random.Random(SEED)
    worst_rt = 0.0
    worst_fd = 0.0
    worst_eig = float("inf")
    for _ in range(samples):
        n = rng.randint(1, min(3, n_max))
        x = [rng.uniform(-10.0, 10.0) for _ in range(n)]
        rep = flow.legendre_check(x)
        worst_rt = max(worst_rt, rep["residuals"]["roundtrip"])
        worst_fd = max(worst_fd, rep["residuals"]["hessian_fd"])
        worst_eig = min(worst_eig, rep["residuals"]["metric_eigmin"])
        if not rep["pass"]:
            return {"check": "legendre-random", "params": {"samples": samples},
                    "failing_point": x, "pass": False}
    return {"check": "legendre-random", "params": {"samples": samples},
            "residuals": {"roundtrip": worst_rt, "hessian_fd": worst_fd,
                          "metric_eigmin": worst_eig},
            "pass": worst_rt < 1e-10 and worst_eig > 0.0}


def rk4_suite(n_max: int, samples: int = 20) -> dict:
    rng = random.Random(SEED + 1)
    worst = 0.0
    for _ in range(samples):
        n = rng.randint(1, min(3, n_max))
        b = rng.randint(1, 3)
        gens = lagrangian.hom_indices(0, b, n)
        I, _, _ = gens[rng.randrange(len(gens))]
        start = [rng.uniform(0.05, 0.5) for _ in range(n)]
        sample = flow.integrate_pair_flow(0, b, I, start, T=5.0, steps=5000,
                                          truncate=False)
        worst = max(worst, sample.max_deviation)
    return {"check": "rk4-vs-exact", "params": {"samples": samples, "T": 5.0,
                                                "steps": 5000},
            "residuals": {"max_deviation": worst}, "pass": worst < 1e-8}


def random_tree_suite(n_max: int, samples: int = 50) -> dict:
    rng = random.Random(SEED + 2)
    worst_meet = 0.0
    worst_area = 0.0
    checked = 0
    while checked < samples:
        n = rng.randint(1, min(3, n_max))
        P = ProductPolytope([n])
        a = rng.randint(0, 2)
        b = a + rng.randint(1, 2)
        c = b + rng.randint(1, 2)
        us = category.hom_space(P, (a,), (b,)).by_degree(0)
        vs = category.hom_space(P, (b,), (c,)).by_degree(0)
        u = us[rng.randrange(len(us))]
        v = vs[rng.randrange(len(vs))]
        rep = flow.verify_tree_numeric(u, v)
        checked += 1
        worst_meet = max(worst_meet, rep["residuals"]["meeting"])
        worst_area = max(worst_area, rep["residuals"]["area_rel_err"])
        if not rep["pass"]:
            return {"check": "tree-numeric-random", "params": {"samples": samples},
                    "failing": rep["params"], "pass": False}
    return {"check": "tree-numeric-random", "params": {"samples": samples},
            "residuals": {"meeting": worst_meet, "area_rel_err": worst_area},
            "pass": worst_meet < 1e-6 and worst_area < 1e-6}


def grid_suite(n_max: int) -> dict:
    failures = []
    for n in range(1, min(2, n_max) + 1):
        for gap in range(1, 4):
            for I, _, _ in lagrangian.hom_indices(0, gap, n):
                rep = flow.grid_max_check(0, gap, I, n)
                if not rep["pass"]:
                    failures.append(rep["params"])
    return {"check": "grid-max-all", "params": {"n_max": min(2, n_max), "gap_max": 3},
            "failures": failures, "pass": not failures}


def lg_suite(n_max: int) -> dict:
    worst = 0.0
    memberships = []
    for n in range(1, min(3, n_max) + 1):
        rep = flow.lg_critical_points(n)
        worst = max(worst, rep["residuals"]["max_grad_residual"])
        memberships.append({
            "n": n,
            "literal": [p["membership"]["literal"]["match"] for p in rep["points"]],
            "rescaled": [p["membership"]["rescaled"]["match"] for p in rep["points"]],
        })
        if not rep["pass"]:
            return {"check": "lg-diagnostic", "params": {"n": n}, "pass": False}
    return {"check": "lg-diagnostic", "params": {"n_max": min(3, n_max)},
            "residuals": {"max_grad_residual": worst},
            "membership_reported_not_asserted": memberships,
            "pass": worst < 1e-12}


def numeric_suite(n_max: int) -> list[dict]:
    return [
        legendre_suite(n_max),
        rk4_suite(n_max),
        random_tree_suite(n_max),
        grid_suite(n_max),
        lg_suite(n_max),
    ]


def run_suite(which: str, n_max: int) -> tuple[list[dict], bool]:
    if which not in ("exact", "numeric", "all"):
        raise ValueError("suite must be exact, numeric or all")
    reports: list[dict] = []
    if which in ("exact", "all"):
        reports.extend(exact_suite(n_max))
    if which in ("numeric", "all"):
        reports.extend(numeric_suite(n_max))
    return reports, all(r["pass"] for r in reports)
