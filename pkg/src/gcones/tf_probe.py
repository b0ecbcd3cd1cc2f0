"""Cones of multiples of g-vectors and probes of their TF-equivalence classes.

Unions over all multiples t·g are approximated along a fixed ladder of t
values.  Every statement about TF classes is checked against a finite
module catalog, so the outputs here are reports with witnesses rather than
decisions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import cones as C
from . import stability as S
from .presentations import engine_for

LADDER = (1, 2, 3, 4, 5, 6, 8, 12, 24)


def ladder(t_max: int) -> tuple:
    return tuple(t for t in LADDER if t <= t_max) or (1,)


def _scale(g, t):
    return tuple(t * x for x in g)


@dataclass
class ConeOfMultiples:
    g: tuple
    per_t: dict                   # t -> frozenset of summand g-vectors of t·g
    union_cone: C.RationalCone
    stabilized_at: int | None
    per_t_multiset: dict = field(default_factory=dict)

    @property
    def stabilized_cone(self) -> C.RationalCone | None:
        if self.stabilized_at is None:
            return None
        return C.cone_from_generators(sorted(self.per_t[self.stabilized_at]), len(self.g))

    def inclusions_hold(self) -> bool:
        """Cone{ind(t g)} ⊆ Cone{ind(t' t g)} for tested t dividing t'."""
        n = len(self.g)
        for t in self.per_t:
            for t2 in self.per_t:
                if t2 % t == 0:
                    big = C.cone_from_generators(sorted(self.per_t[t2]), n)
                    if not all(C.contains(big, h) for h in self.per_t[t]):
                        return False
        return True


def cone_of_multiples(alg, g: Sequence[int], t_max: int = 24, n_samples: int = 8,
                      seed: int = 0) -> ConeOfMultiples:
    eng = engine_for(alg)
    g = tuple(int(x) for x in g)
    n = len(g)
    per_t, per_ms = {}, {}
    for t in ladder(t_max):
        dec = eng.decompose(_scale(g, t), n_samples, seed)
        per_t[t] = dec.ind_set
        per_ms[t] = dec.multiset
    union = C.cone_from_generators(sorted(set().union(*per_t.values())), n)
    stab = None
    for t in sorted(per_t):
        cone = C.cone_from_generators(sorted(per_t[t]), n)
        if all(C.contains(cone, h) for s in per_t.values() for h in s):
            stab = t
            break
    return ConeOfMultiples(g, per_t, union, stab, per_ms)


def ray_condition_proxy(alg, g, t_max: int = 24, n_samples: int = 8, seed: int = 0,
                        com: ConeOfMultiples | None = None) -> bool:
    com = com or cone_of_multiples(alg, g, t_max, n_samples, seed)
    cone = com.union_cone
    if not cone.is_pointed:
        return False
    rays = set(cone.rays)
    for members in com.per_t.values():
        on_ray = {}
        for h in members:
            r = C.primitive(h)
            if r not in rays:
                return False
            on_ray[r] = on_ray.get(r, 0) + 1
        if any(on_ray.get(r, 0) != 1 for r in rays):
            return False
    return True


def is_reduced(alg, g, t_max: int = 24, n_samples: int = 8, seed: int = 0) -> bool:
    eng = engine_for(alg)
    g = tuple(int(x) for x in g)
    for h in sorted(eng.ind_set(g, n_samples, seed)):
        rest = tuple(a - b for a, b in zip(g, h))
        if any(rest) and C.contains(cone_of_multiples(alg, rest, t_max, n_samples, seed).union_cone, h):
            return False
    return True


@dataclass
class ReducedVersion:
    g: tuple
    reduced: tuple
    dropped: list
    cones_equal: bool
    independent: bool


def reduced_version(alg, g, t_max: int = 24, n_samples: int = 8, seed: int = 0) -> ReducedVersion:
    eng = engine_for(alg)
    g0 = tuple(int(x) for x in g)
    cur = g0
    dropped = []
    changed = True
    while changed and any(cur):
        changed = False
        for h in sorted(eng.ind_set(cur, n_samples, seed)):
            rest = tuple(a - b for a, b in zip(cur, h))
            if any(rest) and C.contains(cone_of_multiples(alg, rest, t_max, n_samples, seed).union_cone, h):
                dropped.append(h)
                cur = rest
                changed = True
                break
    c0 = cone_of_multiples(alg, g0, t_max, n_samples, seed).union_cone
    c1 = cone_of_multiples(alg, cur, t_max, n_samples, seed).union_cone
    ind = sorted(eng.ind_set(cur, n_samples, seed))
    independent = C.rank(ind, len(g0)) == len(ind)
    return ReducedVersion(g0, cur, dropped, C.equal_cones(c0, c1), independent)


def tame_part(alg, g, t_max: int = 24, n_samples: int = 8, seed: int = 0) -> tuple:
    eng = engine_for(alg)
    com = cone_of_multiples(alg, g, t_max, n_samples, seed)
    members = sorted(set().union(*com.per_t.values()))
    out = [0] * len(com.g)
    for h in members:
        if eng.is_tame(h, n_samples, seed):
            out = [a + b for a, b in zip(out, h)]
    return tuple(out)


# ---------------------------------------------------------------------------
# TF-class probes

def indistinguishable_points(g, catalog: S.ModuleCatalog, grid) -> list:
    sg = S.tf_signature(g, catalog)
    return [h for h in grid if not S.compare_signatures(sg, S.tf_signature(h, catalog)).distinguished]


@dataclass
class DimensionReport:
    g: tuple
    cone_span: int | None          # (a) dim ⟨ind(ℕg)⟩
    tf_span_lower: int             # (b) rank of grid points indistinguishable from g
    w_estimate: int                # (c)
    kernel_rank: int               # (d) dim of common kernel of the sampled class
    codim_one_case: bool
    outside_interior: list         # indistinguishable points outside the open cone
    catalog_hash: str


def dimension_report(alg, g, catalog: S.ModuleCatalog, grid, t_max: int = 24,
                     n_samples: int = 8, seed: int = 0, with_cone: bool = True) -> DimensionReport:
    g = tuple(int(x) for x in g)
    n = len(g)
    pts = indistinguishable_points(g, catalog, grid)
    span_b = C.rank(pts + [g], n) if any(g) or pts else 0
    w = S.w_space_estimate(g, catalog).span
    cone_span, outside = None, []
    if with_cone:
        com = cone_of_multiples(alg, g, t_max, n_samples, seed)
        cone_span = com.union_cone.span_dim
        cone = com.union_cone
        outside = [h for h in pts if any(h) and not C.in_relative_interior(cone, h)]
    return DimensionReport(g, cone_span, span_b, w, n - span_b,
                           cone_span == n - 1, outside, catalog.hash)


def _positive_combination(gens, rng, lo=1, hi=20) -> tuple:
    if not gens:
        return ()
    w = rng.integers(lo, hi + 1, size=len(gens))
    return tuple(int(sum(int(wi) * v[j] for wi, v in zip(w, gens))) for j in range(len(gens[0])))


def interior_points(cone: C.RationalCone, count: int, rng) -> list:
    gens = cone.canonical_generators()
    if not gens:
        return [tuple([0] * cone.n)] * count
    return [_positive_combination(gens, rng) for _ in range(count)]


def boundary_points(cone: C.RationalCone, count: int, rng) -> list:
    faces = C.boundary_faces(cone)
    if not faces:
        return []
    out = []
    for _ in range(count):
        f = faces[int(rng.integers(0, len(faces)))]
        gens = f.canonical_generators()
        out.append(_positive_combination(gens, rng) if gens else tuple([0] * cone.n))
    return out


@dataclass
class InteriorProbe:
    g: tuple
    cone: C.RationalCone
    interior_total: int
    interior_distinguished: list    # (point, witness index), expected empty
    boundary_total: int
    boundary_witnesses: list        # (point, witness index)
    boundary_hits: list             # boundary points indistinguishable from g
    tame_part: tuple
    catalog_hash: str

    @property
    def interior_ok(self) -> bool:
        return not self.interior_distinguished

    @property
    def boundary_all_distinguished(self) -> bool:
        return not self.boundary_hits


def interior_membership_probe(alg, g, catalog: S.ModuleCatalog, n_interior: int = 32,
                              n_boundary: int = 32, t_max: int = 24, n_samples: int = 8,
                              seed: int = 0) -> InteriorProbe:
    g = tuple(int(x) for x in g)
    com = cone_of_multiples(alg, g, t_max, n_samples, seed)
    cone = com.stabilized_cone or com.union_cone
    rng = np.random.default_rng(seed)
    sg = S.tf_signature(g, catalog)
    bad_in = []
    for pt in interior_points(cone, n_interior, rng):
        v = S.compare_signatures(sg, S.tf_signature(pt, catalog))
        if v.distinguished:
            bad_in.append((pt, v.witness))
    wit, hits = [], []
    bpts = boundary_points(cone, n_boundary, rng)
    for pt in bpts:
        v = S.compare_signatures(sg, S.tf_signature(pt, catalog))
        if v.distinguished:
            wit.append((pt, v.witness))
        else:
            hits.append(pt)
    tp = tame_part(alg, g, t_max, n_samples, seed) if hits else tuple([0] * len(g))
    return InteriorProbe(g, cone, n_interior, bad_in, len(bpts), wit, hits, tp, catalog.hash)


def open_cone_witnesses(alg, g, catalog: S.ModuleCatalog, count: int = 16, n_samples: int = 8,
                        seed: int = 0) -> list:
    """Points of Cone°{ind(g)} distinguished from g (each one would contradict the theory)."""
    eng = engine_for(alg)
    ind = sorted(eng.ind_set(g, n_samples, seed))
    cone = C.cone_from_generators(ind, len(g))
    rng = np.random.default_rng(seed)
    sg = S.tf_signature(g, catalog)
    out = []
    for pt in interior_points(cone, count, rng):
        v = S.compare_signatures(sg, S.tf_signature(pt, catalog))
        if v.distinguished:
            out.append((pt, v.witness))
    return out


def same_ind_witnesses(alg, pairs, catalog: S.ModuleCatalog, n_samples: int = 8, seed: int = 0) -> list:
    """For pairs (g, h) with equal ind sets, any catalog module distinguishing them."""
    eng = engine_for(alg)
    out = []
    for g, h in pairs:
        if eng.ind_set(g, n_samples, seed) != eng.ind_set(h, n_samples, seed):
            continue
        v = S.tf_equivalent_probe(g, h, catalog)
        if v.distinguished:
            out.append((g, h, v.witness))
    return out
