from fractions import Fraction
from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, strategies as st

from gcones import cones as C


def fm_member(gens, v):
    """Fourier–Motzkin oracle: is v = G λ solvable with λ ≥ 0?

    Rows are (a, b) meaning a·λ ≤ b; variables are eliminated one at a time.
    """
    k = len(gens)
    if k == 0:
        return not any(v)
    rows = []
    for j in range(len(v)):
        a = [Fraction(g[j]) for g in gens]
        rows.append((a, Fraction(v[j])))
        rows.append(([-x for x in a], Fraction(-v[j])))
    for i in range(k):
        a = [Fraction(0)] * k
        a[i] = Fraction(-1)
        rows.append((a, Fraction(0)))
    for var in range(k):
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        keep = [r for r in rows if r[0][var] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                s, t = ap[var], -an[var]
                keep.append(([t * x + s * y for x, y in zip(ap, an)], t * bp + s * bn))
        # drop duplicate rows to keep the blow-up small
        rows = list({(tuple(a), b): (a, b) for a, b in keep}.values())
    return all(b >= 0 for _, b in rows)


small = st.integers(-3, 3)


def vecs(n, lo=1, hi=4):
    return st.lists(st.lists(small, min_size=n, max_size=n).map(tuple), min_size=lo, max_size=hi)


def test_spec_examples():
    c = C.cone_from_generators([(1, 0), (1, 1), (0, 1)])
    assert c.rays == [(0, 1), (1, 0)]
    d = C.cone_from_generators([(1, 0, 0), (0, 1, 0)])
    assert d.span_dim == 2 and C.is_simplicial(d)
    q = C.cone_from_generators([(1, 0), (0, 1)])
    assert C.in_relative_interior(q, (1, 1))
    assert C.contains(q, (1, 0)) and not C.in_relative_interior(q, (1, 0))
    assert not C.contains(q, (-1, 0))
    assert C.equal_cones(q, c)


def test_zero_vector():
    q = C.cone_from_generators([(1, 0), (0, 1)])
    assert C.contains(q, (0, 0)) and not C.in_relative_interior(q, (0, 0))
    z = C.zero_cone(2)
    assert C.contains(z, (0, 0)) and C.in_relative_interior(z, (0, 0))


def test_whole_plane():
    w = C.cone_from_generators([(1, 0), (0, 1), (-1, -1)])
    assert w.span_dim == 2 and not C.is_simplicial(w) and w.rays == []
    assert C.equal_cones(w, C.cone_from_generators([(1, 0), (0, 1), (-1, 0), (0, -1)]))


def test_face_lattices():
    q = C.cone_from_generators([(1, 0), (0, 1)])
    faces = C.boundary_faces(q)
    assert sorted(f.generators for f in faces) == [(), ((0, 1),), ((1, 0),)]
    s = C.cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    dims = sorted(f.span_dim for f in C.boundary_faces(s))
    assert dims == [0, 1, 1, 1, 2, 2, 2]


def test_face_cap():
    with pytest.raises(C.CapExceeded):
        C.boundary_faces(C.cone_from_generators([tuple(int(i == j) for j in range(9)) for i in range(9)]))


@given(vecs(4), st.lists(st.lists(small, min_size=4, max_size=4), min_size=5, max_size=5))
def test_membership_matches_fourier_motzkin(gens, points):
    cone = C.cone_from_generators(gens, 4)
    for g in gens:
        assert C.contains(cone, g)
    for v in points:
        assert C.contains(cone, v) == fm_member(list(cone.generators), v)


@given(vecs(3, 1, 5))
def test_double_description_round_trip(gens):
    cone = C.cone_from_generators(gens, 3)
    back = C.cone_from_generators(C.generators_from_h(cone.span_equations, cone.facets, 3), 3)
    assert C.equal_cones(cone, back)
    for r in cone.rays + cone.facets:
        assert reduce(gcd, (abs(x) for x in r), 0) == 1


@given(st.lists(small, min_size=9, max_size=9))
def test_random_simplicial(entries):
    vs = [tuple(entries[3 * i:3 * i + 3]) for i in range(3)]
    assume(C.rank(vs, 3) == 3)
    assert C.is_simplicial(C.cone_from_generators(vs))


@given(vecs(3, 2, 5), st.integers(1, 5), st.lists(st.integers(1, 5), min_size=5, max_size=5))
def test_segment_and_exit_properties(gens, t, ws):
    cone = C.cone_from_generators(gens, 3)
    assume(cone.generators and cone.facets)
    g = list(cone.generators)
    eta = tuple(sum(w * v[j] for w, v in zip(ws, g)) for j in range(3))
    assume(C.in_relative_interior(cone, eta))
    for face in C.boundary_faces(cone):
        fg = face.canonical_generators()
        gamma = tuple(sum(v[j] for v in fg) for j in range(3)) if fg else (0, 0, 0)
        for s in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            pt = [s * a + (1 - s) * b for a, b in zip(eta, gamma)]
            assert C.in_relative_interior(cone, pt)
        if cone.is_pointed and any(gamma):
            # points of (2γ − η, γ) leave the cone
            for s in (Fraction(1, 4), Fraction(1, 2)):
                pt = [s * (2 * b - a) + (1 - s) * b for a, b in zip(eta, gamma)]
                assert not C.contains(cone, pt)


@given(vecs(3, 2, 5), st.lists(st.integers(1, 4), min_size=5, max_size=5))
def test_boundary_points_lie_in_one_face(gens, ws):
    cone = C.cone_from_generators(gens, 3)
    faces = C.boundary_faces(cone)
    for f in cone.facets:
        tight = [g for g in cone.canonical_generators() if C.dot(f, g) == 0]
        pt = tuple(sum(w * v[j] for w, v in zip(ws, tight)) for j in range(3))
        hits = [face for face in faces if C.in_relative_interior(face, pt)]
        assert len(hits) == 1


@given(vecs(3, 1, 4), vecs(3, 1, 4))
def test_intersection_against_oracle(g1, g2):
    c1, c2 = C.cone_from_generators(g1, 3), C.cone_from_generators(g2, 3)
    both = C.intersect(c1, c2)
    for g in both.generators:
        assert fm_member(list(c1.generators), g) and fm_member(list(c2.generators), g)
