"""Exact rational polyhedral cones.

Generators are scaled to primitive integer vectors on input, so all derived
data (facets, rays, span equations) is integral.  Facets are computed in the
linear span of the cone by a double description pass over the dual cone; the
same routine converts H-representations back to generators for intersections.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import CapExceeded

FACE_DIM_CAP = 8

IntVec = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# exact linear algebra over Q

def primitive(v: Sequence) -> IntVec:
    """Positive multiple of a rational vector with coprime integer entries."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _rref(rows: list[list[Fraction]], ncols: int):
    m = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], piv


def rank(vecs: Sequence[Sequence], n: int | None = None) -> int:
    vecs = [[Fraction(x) for x in v] for v in vecs]
    if not vecs:
        return 0
    return len(_rref(vecs, len(vecs[0]) if n is None else n)[1])


def nullspace(rows: Sequence[Sequence], n: int) -> list[IntVec]:
    """Primitive integer basis of {x : r·x = 0 for all rows r}."""
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    m, piv = _rref([[Fraction(x) for x in r] for r in rows], n)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -m[i][f]
        out.append(primitive(v))
    return out


def row_basis(rows: Sequence[Sequence], n: int) -> list[IntVec]:
    if not rows:
        return []
    m, _ = _rref([[Fraction(x) for x in r] for r in rows], n)
    return [primitive(r) for r in m]


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _matvec_cols(basis: list[IntVec], z: Sequence) -> IntVec:
    """Σ z_i basis_i."""
    n = len(basis[0])
    return tuple(sum(z[i] * basis[i][j] for i in range(len(basis))) for j in range(n))


# ---------------------------------------------------------------------------
# double description

def _pointed_rays(a: list[IntVec], k: int) -> list[IntVec]:
    """Extreme rays of {z ∈ Q^k : a_i·z ≥ 0}, assuming the rows span Q^k."""
    if k == 0:
        return []
    # initial simplicial cone from k independent rows
    chosen: list[int] = []
    for i, row in enumerate(a):
        if rank([a[j] for j in chosen] + [row], k) > len(chosen):
            chosen.append(i)
        if len(chosen) == k:
            break
    if len(chosen) < k:
        raise ValueError("constraint rows do not span the space")
    rays = []
    for i in chosen:
        # ray tight on all chosen rows except i
        others = [a[j] for j in chosen if j != i]
        z = nullspace(others, k)[0]
        if dot(a[i], z) < 0:
            z = tuple(-x for x in z)
        rays.append(z)
    processed = list(chosen)
    for i, row in enumerate(a):
        if i in chosen:
            continue
        vals = [dot(row, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        new = list(pos) + zero
        if neg:
            for rp in pos:
                vp = dot(row, rp)
                for rn, vn in neg:
                    tight = [a[j] for j in processed if dot(a[j], rp) == 0 and dot(a[j], rn) == 0]
                    if rank(tight, k) != k - 2:
                        continue
                    new.append(primitive([vp * x - vn * y for x, y in zip(rn, rp)]))
        processed.append(i)
        rays = list(dict.fromkeys(new))
    return sorted(set(rays))


def generators_from_h(eqs: Sequence[Sequence], ineqs: Sequence[Sequence], n: int) -> list[IntVec]:
    """Generators of {x ∈ Q^n : e·x = 0, f·x ≥ 0}; lineality enters as ± pairs."""
    basis = nullspace([list(e) for e in eqs], n) if eqs else nullspace([], n)
    if not basis:
        return []
    k = len(basis)
    a = [primitive([dot(f, b) for b in basis]) for f in ineqs]
    a = [r for r in a if any(r)]
    lin = nullspace(a, k) if a else nullspace([], k)
    gens = []
    for l in lin:
        x = _matvec_cols(basis, l)
        gens.append(primitive(x))
        gens.append(primitive([-t for t in x]))
    if a:
        w = row_basis(a, k)  # complement of the lineality inside Q^k
        aw = [primitive([dot(r, wi) for wi in w]) for r in a]
        for z in _pointed_rays(aw, len(w)):
            coords = _matvec_cols(w, z)
            gens.append(primitive(_matvec_cols(basis, coords)))
    return sorted(set(gens))


# ---------------------------------------------------------------------------
# cones

class RationalCone:
    """Cone{generators} with derived span equations, facets and (when pointed) rays."""

    def __init__(self, generators: Iterable[Sequence], n: int | None = None):
        gens = [primitive(g) for g in generators]
        if n is None:
            if not gens:
                raise ValueError("the ambient dimension is needed for an empty generator list")
            n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("generators must share one length")
        self.n = n
        self.generators = tuple(sorted({g for g in gens if any(g)}))

    @cached_property
    def span_basis(self) -> list[IntVec]:
        return row_basis(list(self.generators), self.n)

    @property
    def span_dim(self) -> int:
        return len(self.span_basis)

    @cached_property
    def span_equations(self) -> list[IntVec]:
        return nullspace(list(self.generators), self.n) if self.generators else nullspace([], self.n)

    @cached_property
    def facets(self) -> list[IntVec]:
        """Integer functionals on the span, each ≥ 0 on the cone and vanishing on a facet."""
        b = self.span_basis
        if not b:
            return []
        k = len(b)
        gb = [primitive([dot(g, bi) for bi in b]) for g in self.generators]
        out = set()
        for z in _pointed_rays(gb, k):
            out.add(primitive(_matvec_cols(b, z)))
        return sorted(out)

    @cached_property
    def lineality_dim(self) -> int:
        return self.span_dim - rank(self.facets, self.n) if self.facets else self.span_dim

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    @cached_property
    def rays(self) -> list[IntVec]:
        if not self.is_pointed:
            return []
        k = self.span_dim
        out = []
        for g in self.generators:
            tight = [f for f in self.facets if dot(f, g) == 0]
            if k == 1 or rank(tight, self.n) == k - 1:
                out.append(g)
        return sorted(set(out))

    def canonical_generators(self) -> list[IntVec]:
        """Rays when pointed, otherwise ± a basis of the lineality plus the remaining rays."""
        if self.is_pointed:
            return list(self.rays)
        return generators_from_h(self.span_equations, self.facets, self.n)

    def __repr__(self):
        return "RationalCone(n=%d, span_dim=%d, rays=%s)" % (self.n, self.span_dim, self.rays)

    def __eq__(self, other):
        return isinstance(other, RationalCone) and equal_cones(self, other)

    def __hash__(self):
        return hash((self.n, tuple(self.canonical_generators())))


def cone_from_generators(vs: Iterable[Sequence], n: int | None = None) -> RationalCone:
    return RationalCone(vs, n)


def zero_cone(n: int) -> RationalCone:
    return RationalCone([], n)


def in_span(cone: RationalCone, v: Sequence) -> bool:
    return all(dot(e, v) == 0 for e in cone.span_equations)


def contains(cone: RationalCone, v: Sequence) -> bool:
    v = [Fraction(x) for x in v]
    return in_span(cone, v) and all(dot(f, v) >= 0 for f in cone.facets)


def in_relative_interior(cone: RationalCone, v: Sequence) -> bool:
    v = [Fraction(x) for x in v]
    return in_span(cone, v) and all(dot(f, v) > 0 for f in cone.facets)


def equal_cones(c1: RationalCone, c2: RationalCone) -> bool:
    return (c1.n == c2.n and all(contains(c2, g) for g in c1.generators)
            and all(contains(c1, g) for g in c2.generators))


def is_simplicial(cone: RationalCone) -> bool:
    return cone.is_pointed and len(cone.rays) == cone.span_dim


def span_dimension(cone: RationalCone) -> int:
    return cone.span_dim


def intersect(c1: RationalCone, c2: RationalCone) -> RationalCone:
    eqs = list(c1.span_equations) + list(c2.span_equations)
    ineqs = list(c1.facets) + list(c2.facets)
    return RationalCone(generators_from_h(eqs, ineqs, c1.n), c1.n)


def boundary_faces(cone: RationalCone) -> list[RationalCone]:
    """All proper faces; their relative interiors partition the relative boundary."""
    if cone.n > FACE_DIM_CAP:
        raise CapExceeded("face enumeration is capped at dimension %d" % FACE_DIM_CAP)
    gens = cone.canonical_generators()
    tight = [frozenset(i for i, g in enumerate(gens) if dot(f, g) == 0) for f in cone.facets]
    faces = set(tight)
    frontier = set(tight)
    while frontier:
        nxt = set()
        for a in frontier:
            for b in tight:
                c = a & b
                if c not in faces:
                    nxt.add(c)
        faces |= nxt
        frontier = nxt
    out = [RationalCone([gens[i] for i in sorted(s)], cone.n) for s in faces]
    out.sort(key=lambda c: (c.span_dim, c.generators))
    return out


def face_containing(cone: RationalCone, v: Sequence) -> RationalCone | None:
    """The unique face whose relative interior holds v (the cone itself included)."""
    if not contains(cone, v):
        return None
    gens = cone.canonical_generators()
    tight = [f for f in cone.facets if dot(f, v) == 0]
    sub = [g for g in gens if all(dot(f, g) == 0 for f in tight)]
    return RationalCone(sub, cone.n)


def ray_of(v: Sequence) -> IntVec:
    return primitive(v)
