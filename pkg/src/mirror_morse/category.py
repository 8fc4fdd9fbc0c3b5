"""The weighted Morse homotopy category on the dual polytope.

Objects are label vectors (one integer per polytope factor), morphism
spaces are spanned by intersection data enumerated factorwise, and the
two-input product is realized by the gradient tree whose two straight
segments meet at the output point v_ac.  Weights are exact positive reals;
the weight of a tree equals the product of the two basis magnitudes at the
meeting point, and the area is minus its log.

Compositions are only defined in the degree-0 regime (a <= b <= c in every
factor); anything else raises UnsupportedRegimeError rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import dg, lagrangian
from .exact import LogValue, PosExact
from .polytope import (Point, ProductPolytope, classify_factor,
                       factor_point_on_boundary, segment_contains,
                       segment_in_factor_boundary)


class NonComposableError(ValueError):
    """Target labels of the left factor do not match the right source."""


class UnsupportedRegimeError(ValueError):
    """Composition touching degree-n (a > b) generators; not computed here."""


@dataclass(frozen=True)
class HomGenerator:
    """One basis element of Mo(P)(L, L').

    components holds the per-factor geometry: a point slice, or None where
    source and target labels agree and the generator spans the whole
    factor (then the index slice is zero).
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    factor_dims: tuple[int, ...]
    components: tuple[Point | None, ...]
    index: tuple[int, ...]
    degree: int

    @property
    def is_identity(self) -> bool:
        return self.source == self.target

    def index_slices(self) -> list[tuple[int, ...]]:
        out, off = [], 0
        for n in self.factor_dims:
            out.append(self.index[off:off + n])
            off += n
        return out

    def point(self) -> Point | None:
        """The full intersection point, or None if some factor is whole."""
        if any(c is None for c in self.components):
            return None
        flat: list[Fraction] = []
        for c in self.components:
            flat.extend(c)  # type: ignore[arg-type]
        return tuple(flat)


@dataclass(frozen=True)
class HomSpace:
    source: tuple[int, ...]
    target: tuple[int, ...]
    generators: tuple[HomGenerator, ...]

    def by_degree(self, degree: int) -> list[HomGenerator]:
        return [g for g in self.generators if g.degree == degree]

    def sectors(self) -> dict[tuple[int, ...], list[HomGenerator]]:
        out: dict[tuple[int, ...], list[HomGenerator]] = {}
        for g in self.generators:
            out.setdefault(g.index, []).append(g)
        return out

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class FactorTree:
    """The projection of a two-input gradient tree to one polytope factor."""

    kind: str  # "point" | "left-identity" | "right-identity" | "identity"
    v_ab: Point | None
    v_bc: Point | None
    v_ac: Point | None
    lam: Fraction | None
    area: LogValue


@dataclass(frozen=True)
class GradientTree2:
    left: HomGenerator
    right: HomGenerator
    factor_trees: tuple[FactorTree, ...]

    @property
    def area(self) -> LogValue:
        total = LogValue.zero()
        for t in self.factor_trees:
            total = total + t.area
        return total

    def weight(self) -> PosExact:
        return (-self.area).exp()

    def meeting_components(self) -> tuple[Point | None, ...]:
        return tuple(t.v_ac for t in self.factor_trees)


@dataclass(frozen=True)
class ScaledGenerator:
    weight: PosExact
    generator: HomGenerator


@dataclass(frozen=True)
class ZeroProduct:
    """Machine-checkable record of a vanishing higher product."""

    arity: int
    required_degree: int
    reason: str

    @property
    def is_zero(self) -> bool:
        return True


def _label_vector(L, r: int) -> tuple[int, ...]:
    L = tuple(int(x) for x in L)
    if len(L) != r:
        raise ValueError(f"label vector {L} does not match {r} factors")
    return L


def hom_space(P: ProductPolytope, L, M) -> HomSpace:
    """Mo(P)(L_L, L_M): tensor product of the factor generator lists."""
    r = len(P.factors)
    L, M = _label_vector(L, r), _label_vector(M, r)
    per_factor = [lagrangian.hom_indices(a, b, n) for a, b, n in zip(L, M, P.dims)]
    gens = []
    for combo in iproduct(*per_factor):
        index: list[int] = []
        components: list[Point | None] = []
        degree = 0
        for I, v, d in combo:
            index.extend(I)
            components.append(v)
            degree += d
        gens.append(HomGenerator(L, M, P.dims, tuple(components), tuple(index), degree))
    gens.sort(key=lambda g: (g.degree, g.index))
    return HomSpace(L, M, tuple(gens))


def identity_generator(P: ProductPolytope, L) -> HomGenerator:
    L = _label_vector(L, len(P.factors))
    return HomGenerator(L, L, P.dims, tuple([None] * len(P.factors)),
                        tuple([0] * P.total_dim), 0)


def _check_composable(g_ab: HomGenerator, g_bc: HomGenerator) -> None:
    if g_ab.factor_dims != g_bc.factor_dims:
        raise NonComposableError("generators live on different polytopes")
    if g_ab.target != g_bc.source:
        raise NonComposableError(
            f"target {g_ab.target} does not match source {g_bc.source}")
    for a, b, c in zip(g_ab.source, g_ab.target, g_bc.target):
        if a > b or b > c:
            raise UnsupportedRegimeError(
                f"labels ({a}, {b}, {c}) leave the degree-0 regime")


def gradient_tree(g_ab: HomGenerator, g_bc: HomGenerator) -> GradientTree2:
    """The two-input tree: straight segments meeting at v_ac, factorwise.

    In a point factor (a < b < c) the meeting point is the convex
    combination v_ac = ((b-a) v_ab + (c-b) v_bc)/(c-a) and the factor area
    is -(f_ab(v_ac) + f_bc(v_ac)).  Factors where a label pair coincides
    contribute a constant tree of zero area.
    """
    _check_composable(g_ab, g_bc)
    I_slices = g_ab.index_slices()
    K_slices = g_bc.index_slices()
    trees = []
    for k, n in enumerate(g_ab.factor_dims):
        a, b, c = g_ab.source[k], g_ab.target[k], g_bc.target[k]
        v_ab, v_bc = g_ab.components[k], g_bc.components[k]
        I, K = I_slices[k], K_slices[k]
        if a == b and b == c:
            trees.append(FactorTree("identity", None, None, None, None, LogValue.zero()))
        elif a == b:
            # constant tree at the right input point
            trees.append(FactorTree("left-identity", None, v_bc, v_bc, None, LogValue.zero()))
        elif b == c:
            trees.append(FactorTree("right-identity", v_ab, None, v_ab, None, LogValue.zero()))
        else:
            lam = Fraction(b - a, c - a)
            v_ac = tuple(lam * p + (1 - lam) * q for p, q in zip(v_ab, v_bc))
            f_ab = lagrangian.potential_value(a, b, I, v_ac)
            f_bc = lagrangian.potential_value(b, c, K, v_ac)
            assert f_ab is not None and f_bc is not None  # weight is never zero here
            trees.append(FactorTree("point", v_ab, v_bc, v_ac, lam, -(f_ab + f_bc)))
    return GradientTree2(g_ab, g_bc, tuple(trees))


def compose(g_ab: HomGenerator, g_bc: HomGenerator) -> ScaledGenerator:
    """m_2 on basis elements: exact weight e^{-A} times the output generator."""
    tree = gradient_tree(g_ab, g_bc)
    index = tuple(i + k for i, k in zip(g_ab.index, g_bc.index))
    components = [None if t.kind == "identity" else t.v_ac for t in tree.factor_trees]
    result = HomGenerator(g_ab.source, g_bc.target, g_ab.factor_dims,
                          tuple(components), index, 0)
    return ScaledGenerator(tree.weight(), result)


def higher_product(generators) -> ZeroProduct:
    """m_l for l >= 3 in the degree-0 regime: zero, by degree counting.

    The output would need degree sum(|V_i|) + 2 - l = 2 - l < 0 and no
    generator of negative degree exists.
    """
    gens = list(generators)
    arity = len(gens)
    if arity < 3:
        raise ValueError("higher_product needs at least three arguments")
    for u, v in zip(gens, gens[1:]):
        _check_composable(u, v)
    if any(g.degree != 0 for g in gens):
        raise UnsupportedRegimeError("higher_product is stated in the degree-0 regime")
    required = 2 - arity
    return ZeroProduct(arity, required,
                       f"target degree {required} is negative; no generator exists")


_CASE_LABELS = {0: "(0)", 1: "(1)", 3: "(3)", 4: "(4)"}


def classify_product_case(g_ab: HomGenerator, g_bc: HomGenerator) -> str:
    """The 4x4 product-case label for two-factor spaces."""
    if len(g_ab.factor_dims) != 2:
        raise ValueError("product cases are defined for exactly two factors")
    _check_composable(g_ab, g_bc)
    (a1, a2), (b1, b2), (c1, c2) = g_ab.source, g_ab.target, g_bc.target
    eqs = (a1 == b1, b1 == c1, a2 == b2, b2 == c2)
    count = sum(eqs)
    if count != 2:
        return _CASE_LABELS[count]
    left_eq, right_eq = (eqs[0], eqs[1]), (eqs[2], eqs[3])
    if all(left_eq) or all(right_eq):
        return "(2'')"
    if eqs[0] == eqs[2]:  # equalities on the same side in both factors
        return "(2)"
    return "(2')"


def generator_in_boundary(g: HomGenerator) -> bool:
    """Whether the generator's locus lies inside the polytope boundary.

    A product of per-factor slices is contained in the boundary iff some
    point slice sits on its factor's boundary; whole-factor slices never
    certify containment.
    """
    return any(c is not None and factor_point_on_boundary(c) for c in g.components)


def tree_in_boundary(tree: GradientTree2) -> bool:
    """Whether the tree image (the segment v_ab--v_bc, factorwise) is in dP."""
    for t in tree.factor_trees:
        if t.kind == "identity":
            continue  # constant at an unconstrained point; cannot certify
        if t.kind == "point":
            if segment_in_factor_boundary(t.v_ab, t.v_bc):
                return True
        elif factor_point_on_boundary(t.v_ac):
            return True
    return False


def boundary_report(P: ProductPolytope, collection) -> dict:
    """Check the boundary propositions over a collection of objects.

    Every generator between distinct objects must lie in the boundary, and
    every composition tree image must lie in the boundary unless all three
    objects coincide.  Returns witnesses for any failure.
    """
    objects = [_label_vector(L, len(P.factors)) for L in collection]
    failures = []
    pairs_checked = 0
    for L in objects:
        for M in objects:
            if L == M:
                continue
            for g in hom_space(P, L, M).generators:
                pairs_checked += 1
                if not generator_in_boundary(g):
                    failures.append({
                        "kind": "generator",
                        "pair": [list(L), list(M)],
                        "index": list(g.index),
                        "point": [str(x) for x in (g.point() or ())],
                    })
    trees_checked = 0
    skipped = 0
    for L in objects:
        for M in objects:
            for N in objects:
                if L == M == N:
                    continue
                if any(a > b or b > c for a, b, c in zip(L, M, N)):
                    skipped += 1
                    continue
                for u in hom_space(P, L, M).generators:
                    for v in hom_space(P, M, N).generators:
                        trees_checked += 1
                        if not tree_in_boundary(gradient_tree(u, v)):
                            failures.append({
                                "kind": "tree",
                                "triple": [list(L), list(M), list(N)],
                                "left_index": list(u.index),
                                "right_index": list(v.index),
                            })
    return {
        "check": "boundary",
        "params": {"space": P.descriptor(),
                   "collection": [list(L) for L in objects]},
        "pairs_checked": pairs_checked,
        "trees_checked": trees_checked,
        "triples_skipped": skipped,
        "failures": failures,
        "pass": not failures,
    }


def associativity_check(P: ProductPolytope, chain) -> dict:
    """Exact m_2 associativity over all basis triples of a 4-object chain."""
    labels = [_label_vector(L, len(P.factors)) for L in chain]
    if len(labels) != 4:
        raise ValueError("associativity_check expects a chain of four objects")
    a, b, c, d = labels
    failures = []
    triples = 0
    for u in hom_space(P, a, b).by_degree(0):
        for v in hom_space(P, b, c).by_degree(0):
            uv = compose(u, v)
            for w in hom_space(P, c, d).by_degree(0):
                triples += 1
                vw = compose(v, w)
                left = compose(uv.generator, w)
                right = compose(u, vw.generator)
                lw = uv.weight * left.weight
                rw = vw.weight * right.weight
                if left.generator != right.generator or lw != rw:
                    failures.append({
                        "chain": [list(x) for x in labels],
                        "indices": [list(u.index), list(v.index), list(w.index)],
                    })
    return {
        "check": "associativity",
        "params": {"space": P.descriptor(), "chain": [list(x) for x in labels]},
        "triples": triples,
        "failures": failures,
        "pass": not failures,
    }
