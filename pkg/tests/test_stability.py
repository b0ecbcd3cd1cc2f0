import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gcones import presentations as PR
from gcones import reps as R
from gcones import stability as S
from gcones.errors import CapExceeded


def all_subspaces_f2(d):
    """Oracle: every subspace of F_2^d as a frozenset of vectors, by closing subsets under sums."""
    vecs = [tuple(v) for v in itertools.product((0, 1), repeat=d)]
    out = set()
    for r in range(d + 1):
        for gens in itertools.combinations(vecs[1:], r):
            span = {tuple([0] * d)}
            for g in gens:
                span |= {tuple((a + b) % 2 for a, b in zip(s, g)) for s in span}
            out.add(frozenset(span))
    return out


def brute_subdimvecs(m):
    alg = m.alg
    per_vertex = [all_subspaces_f2(d) for d in m.dims]
    out = set()
    for choice in itertools.product(*per_vertex):
        ok = True
        for k, mat in enumerate(m.mats):
            s, t = alg.arrow_src[k], alg.arrow_tgt[k]
            for v in choice[s]:
                vec = np.array(v, dtype=np.int64).reshape(m.dims[s])
                img = tuple(int(x) % 2 for x in mat @ vec)
                if img not in choice[t]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(tuple(int(np.log2(len(u))) for u in choice))
    return out


def test_subdimvecs_examples(a2_twin):
    assert S.subdimvecs(R.simple(a2_twin, 1)) == {(0, 0), (1, 0)}
    assert S.subdimvecs(R.projective(a2_twin, 1)) == {(0, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("name", ["a2", "a3", "kronecker2", "cycle3"])
def test_subdimvecs_against_brute_force(name):
    cat = S.build_catalog(__import__("gcones").builtin_algebra(name), q=2, dim_cap=6,
                          random_morphisms=40)
    checked = 0
    for m in cat.members:
        if max(m.dims) <= 3 and m.total_dim <= 6:
            assert S.subdimvecs(m) == brute_subdimvecs(m)
            checked += 1
    assert checked >= 3


def test_subdimvecs_of_sum_contain_sumset(a2_twin):
    m, n = R.projective(a2_twin, 1), R.simple(a2_twin, 1)
    both = S.subdimvecs(R.direct_sum(m, n))
    for x in S.subdimvecs(m):
        for y in S.subdimvecs(n):
            assert tuple(a + b for a, b in zip(x, y)) in both


def test_cap(a2_twin):
    big = R.direct_sum(*[R.projective(a2_twin, 1)] * 6)
    with pytest.raises(CapExceeded):
        S.subdimvecs(big, dim_cap=10)
    with pytest.raises(CapExceeded):
        S.subdimvecs(R.simple(__import__("gcones").builtin_algebra("a2"), 1))


def test_semistability_examples(a2_twin):
    p1, s1 = R.projective(a2_twin, 1), R.simple(a2_twin, 1)
    assert S.is_semistable((1, -1), p1)
    assert S.in_T((1, -1), s1)
    for m in (p1, s1, R.simple(a2_twin, 2)):
        assert S.is_semistable((0, 0), m)
    assert S.classes((Fraction(1, 2), Fraction(-1, 2)), p1) == S.classes((1, -1), p1)


def test_presentation_membership(a2, a2_twin):
    rng = np.random.default_rng(0)
    big = PR.sample_presentation(a2, (1, -1), rng)
    a = S.twin_generic_sample(big, a2_twin, (1, -1), rng)
    s2 = R.simple(a2_twin, 2)
    mem = S.presentation_torsion_membership(a, s2)
    assert mem["Fbar"] and not mem["Tbar"]
    zero = R.zero_rep(a2_twin)
    assert all(S.presentation_torsion_membership(a, zero).values())
    proj = PR.sample_presentation(a2_twin, (1, 0), 0)
    mem = S.presentation_torsion_membership(proj, R.simple(a2_twin, 2))
    assert mem["Tbar"]


def test_probe_examples(a2_catalog):
    v = S.tf_equivalent_probe((1, 0), (2, -1), a2_catalog)
    assert v.distinguished
    assert a2_catalog.members[v.witness].dims == (0, 1)
    assert not S.tf_equivalent_probe((2, -1), (3, -2), a2_catalog).distinguished
    assert not S.tf_equivalent_probe((2, -1), (4, -2), a2_catalog).distinguished


def test_w_estimates(a2_catalog):
    assert S.w_space_estimate((2, -1), a2_catalog).span == 0
    assert S.w_space_estimate((1, -1), a2_catalog).span >= 1
    assert S.w_space_estimate((0, 0), a2_catalog).span == 2


def test_catalog_covers_a2_bricks(a2_catalog):
    assert sorted(m.dims for m in a2_catalog.members) == [(0, 1), (1, 0), (1, 1)]
    assert len(a2_catalog.hash) == 16


def test_catalog_members_pairwise_non_isomorphic(kron2):
    cat = S.build_catalog(kron2, q=2, dim_cap=6, random_morphisms=60)
    ms = cat.members
    for i in range(len(ms)):
        assert ms[i].total_dim <= 6
        for j in range(i + 1, len(ms)):
            assert not R.is_isomorphic(ms[i], ms[j])


def test_dg_examples(a2):
    assert S.in_Dg(a2, (0, 1), (1, 0))
    assert S.in_Dg(a2, (0, -1), (1, -1))
    rep = S.dg_report(a2, (0, 1), (1, -1))
    assert not rep.value and not rep.anomaly


def test_count_signatures(a2_catalog):
    assert S.count_semistable_tp_signatures((0, 0), S.box_grid(2, -3, 3), a2_catalog) == 1
    small = S.count_semistable_tp_signatures((1, -1), S.box_grid(2, -2, 2), a2_catalog)
    big = S.count_semistable_tp_signatures((1, -1), S.box_grid(2, -3, 3), a2_catalog)
    assert 2 <= small <= big


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), st.sampled_from([2, 3, 7]))
def test_torsion_pair_axioms_and_scaling(a2_catalog, theta, t):
    sig = S.tf_signature(theta, a2_catalog)
    ms = a2_catalog.members
    for i, x in enumerate(ms):
        for j, y in enumerate(ms):
            if sig.rows[i][0] and sig.rows[j][3]:
                assert R.hom_dim(x, y) == 0
    scaled = S.tf_signature(tuple(t * c for c in theta), a2_catalog)
    assert scaled.rows == sig.rows


def test_translation_lemma_probe(a2_catalog):
    # chamber-interior pairs (θ, η): each M ∈ T_θ lies in T_{tθ−η} for some t ≤ 16
    for theta, eta in [((2, -1), (3, -2)), ((1, 1), (2, 1)), ((-1, 2), (-2, 3))]:
        assert not S.tf_equivalent_probe(theta, eta, a2_catalog).distinguished
        for m in a2_catalog.members:
            if S.in_T(theta, m):
                assert any(S.in_T(tuple(t * a - b for a, b in zip(theta, eta)), m) for t in range(1, 17))


def test_sampled_union_consistency(a2, a2_catalog):
    # every sampled a in Hom(t g) gives T̄_a ⊆ T̄_g on the catalog
    twin = a2_catalog.alg
    rng = np.random.default_rng(1)
    for g in [(1, -1), (2, -1), (1, -2)]:
        for t in (1, 2, 3):
            tg = tuple(t * x for x in g)
            a = PR.sample_presentation(twin, tg, rng)
            for m in a2_catalog.members:
                if S.presentation_torsion_membership(a, m)["Tbar"]:
                    assert S.in_Tbar(g, m)
