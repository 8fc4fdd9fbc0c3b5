"""Structure tables: the full composition data of a collection, as JSON.

The same schema is emitted from the Morse side (weights through gradient
trees) and from the monomial side (weights through normalization-constant
ratios), so the two can be diffed field by field.  On a strongly
exceptional collection the diff must come out empty.

Degree-0 generators are listed in full; the degree-n ranks for backward
pairs are compared as counts only ("higher_rank"), enumerated on the Morse
side and evaluated in closed form on the monomial side.
"""

from __future__ import annotations

import json

from . import category, dg
from .polytope import ProductPolytope, classify_factor


def lexicographic_collection(ranges) -> list[tuple[int, ...]]:
    """Objects O(a_1, ..., a_r) over per-factor label ranges, lex ordered."""
    out = [()]
    for lo, hi in ranges:
        out = [prefix + (a,) for prefix in out for a in range(lo, hi + 1)]
    return out


def point_strings(P: ProductPolytope, components) -> list[str]:
    coords: list[str] = []
    for piece, n in zip(components, P.dims):
        if piece is None:
            coords.extend(["*"] * n)
        else:
            coords.extend(str(c) for c in piece)
    return coords


def boundary_faces(components) -> list[dict]:
    faces = []
    for k, piece in enumerate(components):
        if piece is None:
            continue
        face = classify_factor(piece, len(piece))
        if face is not None and face.active:
            entry = face.json_dict()
            entry["factor"] = k
            faces.append(entry)
    return sorted(faces, key=lambda f: f["factor"])


def _gen_entry(P: ProductPolytope, index, components, degree: int) -> dict:
    return {
        "index": list(index),
        "point": point_strings(P, components),
        "degree": degree,
        "boundary_faces": boundary_faces(components),
    }


def _gen_ref(source, target, index) -> dict:
    return {"from": list(source), "to": list(target), "index": list(index)}


def _dg_components(L, M, index, P: ProductPolytope):
    components = []
    off = 0
    for a, b, n in zip(L, M, P.dims):
        piece = index[off:off + n]
        components.append(None if a == b else dg.v_point(a, b, piece))
        off += n
    return tuple(components)


def _morse_homs(P, objects, hom_cache) -> list[dict]:
    out = []
    for L in objects:
        for M in objects:
            hs = hom_cache[(L, M)]
            deg0 = hs.by_degree(0)
            out.append({
                "from": list(L),
                "to": list(M),
                "generators": [
                    _gen_entry(P, g.index, g.components, 0)
                    for g in sorted(deg0, key=lambda g: g.index)
                ],
                "higher_rank": len(hs.generators) - len(deg0),
            })
    return out


def _dg_homs(P, objects) -> list[dict]:
    out = []
    for L in objects:
        for M in objects:
            gens = []
            if all(a <= b for a, b in zip(L, M)):
                for index in _dg_homs_indices(P, L, M):
                    gens.append(_gen_entry(P, index, _dg_components(L, M, index, P), 0))
            total = 1
            for a, b, n in zip(L, M, P.dims):
                total *= dg.hom_dimension(a, b, n) if a <= b else dg.serre_rank(a, b, n)
            out.append({
                "from": list(L),
                "to": list(M),
                "generators": gens,
                "higher_rank": total - len(gens),
            })
    return out


def _case_label(L, M, N) -> str | None:
    if len(L) != 2:
        return None
    eqs = (L[0] == M[0], M[0] == N[0], L[1] == M[1], M[1] == N[1])
    count = sum(eqs)
    if count != 2:
        return {0: "(0)", 1: "(1)", 3: "(3)", 4: "(4)"}[count]
    if (eqs[0] and eqs[1]) or (eqs[2] and eqs[3]):
        return "(2'')"
    return "(2)" if eqs[0] == eqs[2] else "(2')"


def _regular_triples(objects):
    """Composable triples inside the degree-0 regime, in listing order."""
    for L in objects:
        for M in objects:
            if any(a > b for a, b in zip(L, M)):
                continue
            for N in objects:
                if any(b > c for b, c in zip(M, N)):
                    continue
                yield L, M, N


def _morse_products(P, objects, hom_cache, precision_bits) -> list[dict]:
    out = []
    for L, M, N in _regular_triples(objects):
        for u in hom_cache[(L, M)].by_degree(0):
            for v in hom_cache[(M, N)].by_degree(0):
                sc = category.compose(u, v)
                entry = {
                    "left": _gen_ref(L, M, u.index),
                    "right": _gen_ref(M, N, v.index),
                    "result": _gen_ref(L, N, sc.generator.index),
                    "weight": sc.weight.json_dict(precision_bits),
                }
                case = _case_label(L, M, N)
                if case is not None:
                    entry["case"] = case
                out.append(entry)
    return out


def _dg_products(P, objects, precision_bits) -> list[dict]:
    out = []
    for L, M, N in _regular_triples(objects):
        left_mons = _dg_homs_indices(P, L, M)
        right_mons = _dg_homs_indices(P, M, N)
        for I in left_mons:
            u = dg.basis(P.dims, L, M, I)
            for K in right_mons:
                v = dg.basis(P.dims, M, N, K)
                coef, result = dg.multiply_bases(u, v)
                entry = {
                    "left": _gen_ref(L, M, I),
                    "right": _gen_ref(M, N, K),
                    "result": _gen_ref(L, N, result.index),
                    "weight": coef.json_dict(precision_bits),
                }
                case = _case_label(L, M, N)
                if case is not None:
                    entry["case"] = case
                out.append(entry)
    return out


def _dg_homs_indices(P, L, M) -> list[tuple[int, ...]]:
    per_factor = [dg.monomial_indices(a, b, n) for a, b, n in zip(L, M, P.dims)]
    indices = [()]
    for factor_list in per_factor:
        indices = [pre + I for pre in indices for I in factor_list]
    return sorted(indices)


def build_table(P: ProductPolytope, objects, side: str, precision_bits: int = 64) -> dict:
    """The full structure table of a collection, from one side."""
    if side not in ("morse", "dg"):
        raise ValueError("side must be 'morse' or 'dg'")
    objects = [tuple(int(a) for a in L) for L in objects]
    table = {
        "space": P.descriptor(),
        "side": side,
        "objects": [list(L) for L in objects],
    }
    if side == "morse":
        hom_cache = {(L, M): category.hom_space(P, L, M)
                     for L in objects for M in objects}
        table["homs"] = _morse_homs(P, objects, hom_cache)
        table["products"] = _morse_products(P, objects, hom_cache, precision_bits)
    else:
        table["homs"] = _dg_homs(P, objects)
        table["products"] = _dg_products(P, objects, precision_bits)
    return table


def table_diff(t1: dict, t2: dict) -> list[str]:
    """Paths at which the two tables differ; the 'side' tag is ignored."""
    diffs: list[str] = []

    def walk(a, b, path):
        if type(a) is not type(b):
            diffs.append(f"{path}: type {type(a).__name__} != {type(b).__name__}")
            return
        if isinstance(a, dict):
            for key in sorted(set(a) | set(b)):
                if key not in a or key not in b:
                    diffs.append(f"{path}.{key}: present on one side only")
                else:
                    walk(a[key], b[key], f"{path}.{key}")
        elif isinstance(a, list):
            if len(a) != len(b):
                diffs.append(f"{path}: length {len(a)} != {len(b)}")
                return
            for i, (x, y) in enumerate(zip(a, b)):
                walk(x, y, f"{path}[{i}]")
        elif a != b:
            diffs.append(f"{path}: {a!r} != {b!r}")

    a = {k: v for k, v in t1.items() if k != "side"}
    b = {k: v for k, v in t2.items() if k != "side"}
    walk(a, b, "$")
    return diffs


def render_json(table: dict) -> str:
    """Deterministic rendering: sorted keys, fixed indentation."""
    return json.dumps(table, sort_keys=True, indent=2) + "\n"
