from gcones import cones as C
from gcones import stability as S
from gcones import tf_probe as TP
from gcones.presentations import engine_for


def test_ladder():
    assert TP.ladder(24) == (1, 2, 3, 4, 5, 6, 8, 12, 24)
    assert TP.ladder(5) == (1, 2, 3, 4, 5)


def test_a2_cone_of_multiples(a2):
    com = TP.cone_of_multiples(a2, (1, -2))
    assert com.stabilized_at == 1
    assert com.union_cone.rays == [(0, -1), (1, -1)]
    assert C.is_simplicial(com.union_cone)
    assert com.inclusions_hold()
    for t, ms in com.per_t_multiset.items():
        assert tuple(sum(m * h[i] for h, m in ms.items()) for i in range(2)) == (t, -2 * t)


def test_semisimple_cone(ss2):
    com = TP.cone_of_multiples(ss2, (1, -1))
    assert com.stabilized_at == 1
    assert C.equal_cones(com.union_cone, C.cone_from_generators([(1, 0), (0, -1)]))
    assert TP.tame_part(ss2, (2, -3)) == (1, -1)


def test_ray_condition_proxy(a2, cycle3):
    assert TP.ray_condition_proxy(a2, (1, 1))
    assert TP.ray_condition_proxy(cycle3, (1, 1, 1))
    assert TP.ray_condition_proxy(a2, (1, -2))


def test_reduced(a2):
    assert TP.is_reduced(a2, (1, -1))
    assert not TP.is_reduced(a2, (2, -2))
    red = TP.reduced_version(a2, (2, -2))
    assert red.reduced == (1, -1) and red.cones_equal and red.independent
    red = TP.reduced_version(a2, (3, -5))
    assert red.independent and red.cones_equal


def test_tame_part_of_tame_vector(a2):
    g = (2, -1)
    assert TP.tame_part(a2, g) == tuple(map(sum, zip(*engine_for(a2).ind_set(g))))


def test_wild_kronecker_tame_part_recorded(kron3):
    # (1,-1) on the 3-Kronecker quiver: a generic map P_2 -> P_1 is a brick of a wild type
    eng = engine_for(kron3)
    tp = TP.tame_part(kron3, (1, -1), t_max=4)
    members = set().union(*TP.cone_of_multiples(kron3, (1, -1), t_max=4).per_t.values())
    expected = [0, 0]
    for h in members:
        if eng.is_tame(h):
            expected = [a + b for a, b in zip(expected, h)]
    assert tp == tuple(expected)


def test_dimension_reports(a2, a2_catalog):
    grid = S.box_grid(2, -3, 3)
    chamber = TP.dimension_report(a2, (2, -1), a2_catalog, grid)
    assert chamber.cone_span == 2 and chamber.w_estimate == 0 and chamber.tf_span_lower == 2
    assert chamber.outside_interior == []
    wall = TP.dimension_report(a2, (2, -2), a2_catalog, grid)
    assert wall.cone_span == 1 and wall.w_estimate == 1 and wall.codim_one_case
    assert wall.outside_interior == [] and wall.tf_span_lower == 1
    zero = TP.dimension_report(a2, (0, 0), a2_catalog, grid)
    assert zero.cone_span == 0 and zero.w_estimate == 2


def test_dimension_drop_on_cycle3(cycle3):
    cat = S.build_catalog(cycle3, q=2, dim_cap=8)
    grid = S.box_grid(3, -3, 3)
    # chamber spanned by (0,1,-1), (0,1,0), (1,0,0) and the wall between its first two rays
    chamber = TP.dimension_report(cycle3, (1, 2, -1), cat, grid, with_cone=False)
    wall = TP.dimension_report(cycle3, (0, 2, -1), cat, grid, with_cone=False)
    assert chamber.tf_span_lower == 3 and chamber.w_estimate == 0
    assert wall.tf_span_lower == 2 and wall.w_estimate == 1


def test_interior_probe_tame(a2, a2_catalog, ss2, ss2_catalog):
    for alg, cat, g in ((a2, a2_catalog, (2, -1)), (a2, a2_catalog, (1, -2)), (ss2, ss2_catalog, (1, -1))):
        probe = TP.interior_membership_probe(alg, g, cat, n_interior=16, n_boundary=16)
        assert probe.interior_ok and probe.boundary_all_distinguished


def test_open_cone_and_same_ind(a2, a2_catalog):
    for g in [(1, -2), (2, -1), (3, -1), (-1, 2)]:
        assert TP.open_cone_witnesses(a2, g, a2_catalog, count=8) == []
    pairs = [((1, -2), (2, -3)), ((2, -1), (3, -1)), ((1, 1), (2, 3))]
    assert TP.same_ind_witnesses(a2, pairs, a2_catalog) == []


def test_common_point_forces_equal_cones(a2):
    # two stabilized open cones sharing an integer point coincide
    gs = [(1, -2), (2, -3), (2, -1), (3, -2)]
    coms = {g: TP.cone_of_multiples(a2, g, t_max=4) for g in gs}
    for g in gs:
        for h in gs:
            cg, ch = coms[g].stabilized_cone, coms[h].stabilized_cone
            if cg is None or ch is None:
                continue
            shared = [p for p in S.box_grid(2, -4, 4)
                      if C.in_relative_interior(cg, p) and C.in_relative_interior(ch, p)]
            if shared:
                assert C.equal_cones(cg, ch)
