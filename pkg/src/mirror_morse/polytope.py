"""The dual polytope of CP^n and of finite products of projective spaces.

Each factor is the closed scaled simplex {x^j >= 0, x^1 + ... + x^n <= 2};
the scale 2 is fixed by the Fubini-Study normalization used throughout and
never varies.  Points are tuples of exact rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

Point = tuple[Fraction, ...]

SUM_CAP = Fraction(2)


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class SimplexFactor:
    """One factor {x in R^n : x^j >= 0, sum x^j <= 2}."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("factor dimension must be positive")

    def vertices(self) -> list[Point]:
        vs = [tuple(Fraction(0) for _ in range(self.dim))]
        for j in range(self.dim):
            vs.append(tuple(SUM_CAP if k == j else Fraction(0) for k in range(self.dim)))
        return vs


@dataclass(frozen=True)
class FactorFace:
    """Active constraints of one factor: which x^j = 0, and whether sum = 2."""

    zeros: frozenset[int]
    cap: bool

    def validate(self, dim: int) -> None:
        if any(j < 0 or j >= dim for j in self.zeros):
            raise ValueError("zero-constraint index out of range")
        if self.cap and len(self.zeros) == dim:
            raise ValueError("all x^j = 0 together with sum = 2 is infeasible")

    @property
    def active(self) -> bool:
        return self.cap or bool(self.zeros)

    def json_dict(self) -> dict:
        return {"zeros": sorted(self.zeros), "sum_eq_2": self.cap}


@dataclass(frozen=True)
class FaceDescriptor:
    faces: tuple[FactorFace, ...]

    @property
    def active(self) -> bool:
        return any(f.active for f in self.faces)

    def json_list(self) -> list[dict]:
        return [f.json_dict() for f in self.faces]


@dataclass(frozen=True)
class Location:
    """Result of classifying a point: interior, boundary (with face), outside."""

    kind: str  # "interior" | "boundary" | "outside"
    face: FaceDescriptor | None = None

    @property
    def is_interior(self) -> bool:
        return self.kind == "interior"

    @property
    def is_boundary(self) -> bool:
        return self.kind == "boundary"


class ProductPolytope:
    """P = P_{n_1} x ... x P_{n_r}; the factor order indexes object labels."""

    def __init__(self, dims) -> None:
        self.factors = tuple(SimplexFactor(int(n)) for n in dims)
        if not self.factors:
            raise ValueError("need at least one factor")
        self.dims = tuple(f.dim for f in self.factors)
        self.total_dim = sum(self.dims)
        offsets = []
        off = 0
        for n in self.dims:
            offsets.append(slice(off, off + n))
            off += n
        self.slices = tuple(offsets)

    # -- space descriptors ("P2", "P1xP2", ...)

    @classmethod
    def from_descriptor(cls, text: str) -> ProductPolytope:
        cleaned = text.replace(" ", "")
        if not re.fullmatch(r"P\d+(?:[xX]P\d+)*", cleaned):
            raise ValueError(f"malformed space descriptor: {text!r}")
        dims = [int(part[1:]) for part in re.split(r"[xX]", cleaned)]
        if any(d < 1 for d in dims):
            raise ValueError(f"factor dimensions must be positive: {text!r}")
        return cls(dims)

    def descriptor(self) -> str:
        return "x".join(f"P{n}" for n in self.dims)

    def __repr__(self) -> str:
        return f"ProductPolytope({self.descriptor()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ProductPolytope) and self.dims == other.dims

    def __hash__(self) -> int:
        return hash(self.dims)

    def split(self, x: Point) -> list[Point]:
        """Slice a full point into its per-factor pieces."""
        if len(x) != self.total_dim:
            raise ValueError(f"point has dimension {len(x)}, expected {self.total_dim}")
        return [tuple(x[s]) for s in self.slices]

    def join(self, pieces) -> Point:
        out: list[Fraction] = []
        for piece in pieces:
            out.extend(piece)
        return tuple(out)

    def classify(self, x) -> Location:
        """Exact classification of a point against the closed polytope."""
        x = as_point(x)
        pieces = self.split(x)
        faces = []
        for piece, factor in zip(pieces, self.factors):
            loc = classify_factor(piece, factor.dim)
            if loc is None:
                return Location("outside")
            faces.append(loc)
        desc = FaceDescriptor(tuple(faces))
        if desc.active:
            return Location("boundary", desc)
        return Location("interior")

    def contains(self, x) -> bool:
        return self.classify(x).kind != "outside"

    def vertices(self) -> list[Point]:
        per_factor = [f.vertices() for f in self.factors]
        return [self.join(combo) for combo in iproduct(*per_factor)]


def classify_factor(piece: Point, dim: int) -> FactorFace | None:
    """Active constraint set of a factor point, or None if outside."""
    if len(piece) != dim:
        raise ValueError(f"factor point has dimension {len(piece)}, expected {dim}")
    if any(c < 0 for c in piece):
        return None
    s = sum(piece)
    if s > SUM_CAP:
        return None
    face = FactorFace(frozenset(j for j, c in enumerate(piece) if c == 0), s == SUM_CAP)
    face.validate(dim)
    return face


def factor_point_on_boundary(piece: Point) -> bool:
    loc = classify_factor(piece, len(piece))
    return loc is not None and loc.active


def segment_contains(a, b, c) -> bool:
    """True iff c = lam*a + (1-lam)*b for some rational lam in [0, 1]."""
    a, b, c = as_point(a), as_point(b), as_point(c)
    if len(a) != len(b) or len(a) != len(c):
        raise ValueError("dimension mismatch")
    lam = None
    for ai, bi, ci in zip(a, b, c):
        if ai != bi:
            lam = (ci - bi) / (ai - bi)
            break
    if lam is None:
        return c == a
    if not (0 <= lam <= 1):
        return False
    return all(ci == lam * ai + (1 - lam) * bi for ai, bi, ci in zip(a, b, c))


def segment_in_factor_boundary(p: Point, q: Point) -> bool:
    """Whether the segment [p, q] lies inside the boundary of one factor.

    A segment lies in a face iff both endpoints activate a common
    constraint; coordinates are nonnegative and sums capped at 2, so no
    interior point of the segment can activate a constraint the endpoints
    do not share.
    """
    fp = classify_factor(p, len(p))
    fq = classify_factor(q, len(q))
    if fp is None or fq is None:
        raise ValueError("segment endpoint outside the polytope")
    if fp.cap and fq.cap:
        return True
    return bool(fp.zeros & fq.zeros)
