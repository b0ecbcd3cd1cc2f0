"""Support τ-tilting pairs via two-term silting complexes.

A pair (M, P) is stored as its list of indecomposable two-term presentations:
minimal presentations of the summands of M, and P_j -> 0 for the summands of
P.  Mutation exchanges one summand X through the cone of a left
approximation X -> T'' by the remaining summands or, when that cone leaves
the two-term window, through the cocone of a right approximation T'' -> X.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import cones as C
from . import reps as R
from .algebra import BoundQuiverAlgebra
from .errors import ApproximationFailed, NotTauRigid
from .presentations import (TwoTermPresentation, decompose_presentation, direct_sum,
                            eliminate, hom_k_basis, unit_position)


@dataclass(frozen=True, eq=False)
class TauRigidPair:
    alg: BoundQuiverAlgebra
    summands: tuple  # indecomposable TwoTermPresentation objects

    @property
    def g_vectors(self) -> list:
        return [s.g_vector for s in self.summands]

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.g_vectors))

    @property
    def m_summands(self) -> list:
        return [s.cokernel() for s in self.summands if s.plus]

    @property
    def p_summands(self) -> list:
        """Vertices (0-based) of the projective part P."""
        return [s.minus[0] for s in self.summands if not s.plus]

    def is_support_tau_tilting(self) -> bool:
        return len(self.summands) == self.alg.n

    def __repr__(self):
        return "TauRigidPair(%s)" % (self.key,)


def projective_presentation(alg, v: int) -> TwoTermPresentation:
    return TwoTermPresentation(alg, (v,), (), np.zeros((1, 0, alg.dim), dtype=np.int64))


def shifted_projective(alg, v: int) -> TwoTermPresentation:
    return TwoTermPresentation(alg, (), (v,), np.zeros((0, 1, alg.dim), dtype=np.int64))


def regular_pair(alg) -> TauRigidPair:
    """(Λ, 0)."""
    return TauRigidPair(alg, tuple(projective_presentation(alg, v) for v in range(alg.n)))


def shifted_pair(alg) -> TauRigidPair:
    """(0, Λ)."""
    return TauRigidPair(alg, tuple(shifted_projective(alg, v) for v in range(alg.n)))


def pair_from_modules(alg, modules: Sequence[R.Representation], proj_vertices: Sequence[int] = ()) -> TauRigidPair:
    summands = []
    for m in modules:
        for piece in R.decompose_module(m):
            summands.append(R.minimal_presentation(piece))
    summands += [shifted_projective(alg, v) for v in proj_vertices]
    return TauRigidPair(alg, tuple(summands))


# ---------------------------------------------------------------------------
# τ-rigidity

def is_tau_rigid_pair(m: Sequence[R.Representation] | R.Representation,
                      p: Sequence[R.Representation] | R.Representation = ()) -> bool:
    """Hom(M, τM) = 0 and Hom(P, M) = 0."""
    ms = [m] if isinstance(m, R.Representation) else list(m)
    ps = [p] if isinstance(p, R.Representation) else list(p)
    if not ms:
        return True
    mm = R.direct_sum(*ms)
    if R.hom_dim(mm, R.tau(mm)):
        return False
    return all(R.hom_dim(x, mm) == 0 for x in ps)


def pair_is_tau_rigid(pair: TauRigidPair) -> bool:
    alg = pair.alg
    return is_tau_rigid_pair(pair.m_summands, [R.projective(alg, v + 1) for v in pair.p_summands])


def cone_of_pair(pair: TauRigidPair, check: bool = True) -> C.RationalCone:
    if check and not pair_is_tau_rigid(pair):
        raise NotTauRigid("pair %s is not τ-rigid" % (pair.key,))
    cone = C.cone_from_generators(pair.g_vectors, pair.alg.n)
    if pair.is_support_tau_tilting() and not (C.is_simplicial(cone) and cone.span_dim == pair.alg.n):
        raise NotTauRigid("g-vectors of a support τ-tilting pair are not linearly independent")
    return cone


# ---------------------------------------------------------------------------
# mutation

def _approximation_target(others: Sequence[TwoTermPresentation], x: TwoTermPresentation, left: bool):
    """(T'', maps) with T'' = ⊕ T_j^{k_j} and maps spanning Hom_K(X, T_j) or Hom_K(T_j, X)."""
    copies, maps = [], []
    for t in others:
        basis = hom_k_basis(x, t) if left else hom_k_basis(t, x)
        for f in basis:
            copies.append(t)
            maps.append(f)
    return copies, maps


def _left_exchange(x, others):
    alg = x.alg
    p = alg.prime
    copies, maps = _approximation_target(others, x, left=True)
    if not copies:
        return _shift_cone_without_target(x)
    t = direct_sum(*copies)
    f1 = np.concatenate([m[0] for m in maps], axis=0)  # T''^{-1} x X^{-1}
    f0 = np.concatenate([m[1] for m in maps], axis=0)  # T''^0 x X^0
    c2 = list(x.minus)
    c1 = list(x.plus) + list(t.minus)
    c0 = list(t.plus)
    d2 = np.concatenate([(-x.d) % p, f1], axis=0)          # C^{-1} x C^{-2}
    d1 = np.concatenate([f0, t.d], axis=1)                 # C^0 x C^{-1}
    while c2:
        hit = unit_position(d2, c1, c2, alg)
        if hit is None:
            return None
        r, c = hit
        d2 = eliminate(d2, c1, c2, alg, r, c)
        d1 = np.delete(d1, r, axis=1)
        del c1[r]
        del c2[c]
    return TwoTermPresentation(alg, c0, c1, d1)


def _shift_cone_without_target(x):
    """Cone of X -> 0 is X[1]: two-term only when X^{-1} = 0, i.e. X = P_v."""
    alg = x.alg
    if x.minus:
        return None
    return TwoTermPresentation(alg, (), x.plus, np.zeros((0, len(x.plus), alg.dim), dtype=np.int64))


def _right_exchange(x, others):
    alg = x.alg
    p = alg.prime
    copies, maps = _approximation_target(others, x, left=False)
    if copies:
        t = direct_sum(*copies)
        h1 = np.concatenate([m[0] for m in maps], axis=1)  # X^{-1} x T''^{-1}
        h0 = np.concatenate([m[1] for m in maps], axis=1)  # X^0 x T''^0
        tm, tp, td = list(t.minus), list(t.plus), t.d
    else:
        h1 = np.zeros((len(x.minus), 0, alg.dim), dtype=np.int64)
        h0 = np.zeros((len(x.plus), 0, alg.dim), dtype=np.int64)
        tm, tp, td = [], [], np.zeros((0, 0, alg.dim), dtype=np.int64)
    z1 = list(tm)                       # degree -1
    z0 = list(tp) + list(x.minus)       # degree 0
    z_top = list(x.plus)                # degree 1
    da = np.concatenate([(-td) % p, h1], axis=0) if (tp or x.minus) else np.zeros((0, len(z1), alg.dim), dtype=np.int64)
    db = np.concatenate([h0, x.d], axis=1)
    while z_top:
        hit = unit_position(db, z_top, z0, alg)
        if hit is None:
            return None
        r, c = hit
        db = eliminate(db, z_top, z0, alg, r, c)
        da = np.delete(da, c, axis=0)
        del z_top[r]
        del z0[c]
    return TwoTermPresentation(alg, z0, z1, da)


def mutate(pair: TauRigidPair, k: int, rng: np.random.Generator | None = None) -> TauRigidPair:
    """Exchange summand k (1-based) for the unique other completion."""
    alg = pair.alg
    if not 1 <= k <= len(pair.summands):
        raise IndexError("summand index %d out of range 1..%d" % (k, len(pair.summands)))
    k -= 1
    x = pair.summands[k]
    others = [s for i, s in enumerate(pair.summands) if i != k]
    rng = rng if rng is not None else np.random.default_rng(k)
    old = {s.g_vector for s in others}
    for exchange in (_left_exchange, _right_exchange):
        y = exchange(x, others)
        if y is None:
            continue
        pieces = decompose_presentation(y, rng)
        fresh = [s for s in pieces if s.g_vector not in old]
        gs = {s.g_vector for s in fresh}
        if len(fresh) >= 1 and len(gs) == 1 and x.g_vector not in gs:
            new = list(pair.summands)
            new[k] = fresh[0]
            return TauRigidPair(alg, tuple(new))
    raise ApproximationFailed("no two-term exchange found for summand %d of %s" % (k + 1, pair.key))


# ---------------------------------------------------------------------------
# enumeration and fans

@dataclass
class Enumeration:
    alg: BoundQuiverAlgebra
    pairs: list
    complete: bool
    edges: list = field(default_factory=list)   # (i, j) index pairs related by one mutation

    @property
    def completeness(self) -> str:
        return "complete" if self.complete else "truncated"


def enumerate_tau_tilting(alg: BoundQuiverAlgebra, max_pairs: int = 10000, max_depth: int = 64,
                          seed: int = 0) -> Enumeration:
    rng = np.random.default_rng(seed)
    start = regular_pair(alg)
    index = {start.key: 0}
    pairs = [start]
    edges = set()
    queue = deque([(start, 0)])
    complete = True
    while queue:
        pair, depth = queue.popleft()
        i = index[pair.key]
        if depth >= max_depth:
            complete = False
            continue
        for k in range(alg.n):
            nb = mutate(pair, k + 1, rng)
            j = index.get(nb.key)
            if j is None:
                if len(pairs) >= max_pairs:
                    complete = False
                    continue
                j = len(pairs)
                index[nb.key] = j
                pairs.append(nb)
                queue.append((nb, depth + 1))
            else:
                _check_collision(pairs[j], nb)
            edges.add((min(i, j), max(i, j)))
    order = sorted(range(len(pairs)), key=lambda t: pairs[t].key)
    pos = {old: new for new, old in enumerate(order)}
    return Enumeration(alg, [pairs[t] for t in order], complete,
                       sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in edges))


def _check_collision(a: TauRigidPair, b: TauRigidPair):
    """Equal g-vector multisets must come from isomorphic modules."""
    ma = sorted(a.summands, key=lambda s: s.g_vector)
    mb = sorted(b.summands, key=lambda s: s.g_vector)
    for x, y in zip(ma, mb):
        if x.plus and not R.is_isomorphic(x.cokernel(), y.cokernel()):
            raise AssertionError("distinct τ-rigid modules share g-vector %s" % (x.g_vector,))


@dataclass
class ChamberFan:
    alg: BoundQuiverAlgebra
    chambers: list           # (TauRigidPair, RationalCone)
    adjacency: list
    complete: bool = True

    @property
    def rays(self) -> set:
        return {r for _, c in self.chambers for r in c.rays}

    def walls(self) -> list:
        """Codimension-one faces shared by adjacent chambers, as cones."""
        out = []
        for i, j in self.adjacency:
            common = set(self.chambers[i][1].rays) & set(self.chambers[j][1].rays)
            out.append(C.cone_from_generators(sorted(common), self.alg.n))
        return out

    def chamber_of(self, v) -> int | None:
        for i, (_, c) in enumerate(self.chambers):
            if C.contains(c, v):
                return i
        return None


def chamber_fan(enum: Enumeration, check_rigid: bool = False) -> ChamberFan:
    chambers = [(p, cone_of_pair(p, check=check_rigid)) for p in enum.pairs]
    return ChamberFan(enum.alg, chambers, list(enum.edges), enum.complete)


def interiors_disjoint(fan: ChamberFan) -> bool:
    n = fan.alg.n
    cs = [c for _, c in fan.chambers]
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if C.intersect(cs[i], cs[j]).span_dim >= n:
                return False
    return True


def random_direction(rng: np.random.Generator, n: int, scale: int = 10**6) -> tuple:
    while True:
        v = tuple(int(x) for x in rng.integers(-scale, scale + 1, size=n))
        if any(v):
            return v


def fan_covering_check(fan: ChamberFan, n_directions: int = 1000, seed: int = 0) -> float:
    rng = np.random.default_rng(seed)
    hit = 0
    for _ in range(n_directions):
        if fan.chamber_of(random_direction(rng, fan.alg.n)) is not None:
            hit += 1
    return hit / n_directions
