import itertools
import math

import numpy as np
import pytest

from gcones import cones as C
from gcones import reps as R
from gcones import stability as S
from gcones import tau_tilting as TT


@pytest.fixture(scope="module")
def cycle_enum(cycle3):
    return TT.enumerate_tau_tilting(cycle3)


@pytest.fixture(scope="module")
def cycle_fan(cycle_enum):
    return TT.chamber_fan(cycle_enum, check_rigid=True)


def brute_force_pairs(alg, modules):
    """Oracle: all (M, P) with M a set of distinct indecomposables, P a set of vertices, n summands total."""
    n = alg.n
    out = set()
    for k in range(n + 1):
        for ms in itertools.combinations(modules, k):
            for ps in itertools.combinations(range(n), n - k):
                mm = [m for m in ms]
                if mm:
                    big = R.direct_sum(*mm)
                    if R.hom_dim(big, R.tau(big)):
                        continue
                    if any(R.hom_dim(R.projective(alg, v + 1), big) for v in ps):
                        continue
                gs = [R.g_vector(m) for m in mm] + [tuple(-int(i == v) for i in range(n)) for v in ps]
                out.add(tuple(sorted(gs)))
    return out


def test_a2_against_brute_force(a2):
    mods = [R.simple(a2, 1), R.simple(a2, 2), R.projective(a2, 1)]
    oracle = brute_force_pairs(a2, mods)
    enum = TT.enumerate_tau_tilting(a2)
    assert len(oracle) == 5
    assert enum.complete and {p.key for p in enum.pairs} == oracle


def test_semisimple_has_four_pairs(ss2):
    oracle = brute_force_pairs(ss2, [R.simple(ss2, 1), R.simple(ss2, 2)])
    enum = TT.enumerate_tau_tilting(ss2)
    assert len(oracle) == 4 and {p.key for p in enum.pairs} == oracle


def test_rigidity_examples(a2):
    lam = [R.projective(a2, 1), R.projective(a2, 2)]
    assert TT.is_tau_rigid_pair(lam, [])
    assert TT.is_tau_rigid_pair([], lam)
    assert TT.is_tau_rigid_pair(R.simple(a2, 1))
    assert not TT.is_tau_rigid_pair(R.simple(a2, 2), R.projective(a2, 2))


def test_cone_of_pair_examples(a2):
    assert C.equal_cones(TT.cone_of_pair(TT.regular_pair(a2)), C.cone_from_generators([(1, 0), (0, 1)]))
    assert C.equal_cones(TT.cone_of_pair(TT.shifted_pair(a2)), C.cone_from_generators([(-1, 0), (0, -1)]))
    pair = TT.pair_from_modules(a2, [R.projective(a2, 1), R.simple(a2, 1)])
    assert C.equal_cones(TT.cone_of_pair(pair), C.cone_from_generators([(1, 0), (1, -1)]))


def test_non_rigid_pair_rejected(a2):
    pair = TT.pair_from_modules(a2, [R.simple(a2, 2)], proj_vertices=[1])
    with pytest.raises(TT.NotTauRigid):
        TT.cone_of_pair(pair)


def test_mutation_examples(a2):
    reg = TT.regular_pair(a2)
    assert reg.g_vectors == [(1, 0), (0, 1)]
    assert sorted(TT.mutate(reg, 2).g_vectors) == [(1, -1), (1, 0)]
    shifted = TT.shifted_pair(a2)
    for k in (1, 2):
        m = TT.mutate(shifted, k)
        assert m.is_support_tau_tilting() and TT.pair_is_tau_rigid(m)
    with pytest.raises(IndexError):
        TT.mutate(reg, 0)


def test_mutation_is_an_involution(cycle_enum):
    rng = np.random.default_rng(0)
    for idx in rng.choice(len(cycle_enum.pairs), size=12, replace=False):
        pair = cycle_enum.pairs[int(idx)]
        for k in range(1, 4):
            assert TT.mutate(TT.mutate(pair, k), k).key == pair.key


def test_cycle3_count_and_rays(cycle_enum, cycle_fan):
    assert len(cycle_enum.pairs) == 20 and cycle_enum.completeness == "complete"
    assert {(0, 1, 0), (-1, 0, 0), (-1, 1, 0), (0, 1, -1), (1, 0, 0)} <= cycle_fan.rays


def test_figure_chambers_present(cycle_fan):
    chambers = {tuple(c.rays) for _, c in cycle_fan.chambers}
    for rays in ([(-1, 0, 0), (-1, 1, 0), (0, 1, -1)], [(-1, 1, 0), (0, 1, -1), (0, 1, 0)],
                 [(0, 1, -1), (0, 1, 0), (1, 0, 0)]):
        assert tuple(rays) in chambers


def test_cycle3_fan_invariants(cycle_fan):
    for pair, cone in cycle_fan.chambers:
        assert C.is_simplicial(cone) and cone.span_dim == 3
        assert TT.pair_is_tau_rigid(pair)
    assert TT.interiors_disjoint(cycle_fan)
    assert TT.fan_covering_check(cycle_fan, 300, seed=5) == 1.0


def test_a2_fan_matches_angular_oracle(a2):
    fan = TT.chamber_fan(TT.enumerate_tau_tilting(a2))
    rays = sorted(fan.rays, key=lambda r: math.atan2(r[1], r[0]))
    expected = {tuple(sorted((rays[i], rays[(i + 1) % len(rays)]))) for i in range(len(rays))}
    assert {tuple(sorted(c.rays)) for _, c in fan.chambers} == expected
    assert TT.fan_covering_check(fan, 1000, seed=1) == 1.0


def test_single_orthant_fraction(a2):
    enum = TT.Enumeration(a2, [TT.regular_pair(a2)], False)
    frac = TT.fan_covering_check(TT.chamber_fan(enum), 1000, seed=2)
    assert 0.18 < frac < 0.32


def test_kronecker_is_truncated(kron2):
    enum = TT.enumerate_tau_tilting(kron2, max_pairs=30, max_depth=10)
    assert enum.completeness == "truncated"


def test_chamber_barycenters_have_no_semistables(a2, a2_catalog):
    fan = TT.chamber_fan(TT.enumerate_tau_tilting(a2))
    for pair, cone in fan.chambers:
        theta = tuple(sum(r[j] for r in cone.rays) for j in range(2))
        assert S.w_space_estimate(theta, a2_catalog).span == 0
        # Fac M lies in T_θ
        ms = [m.transport(a2_catalog.alg) for m in pair.summands if m.plus]
        if not ms:
            continue
        big = R.direct_sum(*(x.cokernel() for x in ms))
        for m in a2_catalog.members:
            if R.in_fac(big, m):
                assert S.in_T(theta, m)
