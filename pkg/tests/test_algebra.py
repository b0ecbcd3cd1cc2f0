import numpy as np
import pytest
from hypothesis import given, strategies as st

from gcones.algebra import (Arrow, PathWord, Quiver, Relation, build_algebra, builtin_algebra,
                            parse_algebra)
from gcones.errors import NotAdmissible, NotFiniteDimensional, NotPrime, ParseError


def monomial_paths(arrows, n, forbidden, bound=40):
    """Oracle: all composable words avoiding the forbidden subwords, by brute-force walking."""
    out = []
    frontier = [(v, ()) for v in range(1, n + 1)]
    out.extend(frontier)
    while frontier:
        nxt = []
        for start, word in frontier:
            end = arrows[word[-1]][1] if word else start
            for lab, (s, t) in arrows.items():
                if s != end:
                    continue
                w = word + (lab,)
                if any(tuple(w[i:i + len(f)]) == f for f in forbidden for i in range(len(w) - len(f) + 1)):
                    continue
                assert len(w) < bound
                nxt.append((start, w))
        out.extend(nxt)
        frontier = nxt
    return out


CYCLE = {"alpha": (1, 2), "beta": (2, 3), "gamma": (3, 1)}
CYCLE_REL = ("beta", "gamma", "alpha") * 3


def test_a2_dimension(a2):
    assert a2.dim == 3
    assert sorted(a2.path_label(b) for b in range(3)) == ["a", "e1", "e2"]


def test_cycle3_dimension_matches_path_oracle(cycle3):
    paths = monomial_paths(CYCLE, 3, [CYCLE_REL])
    assert len(paths) == 30
    assert cycle3.dim == 30
    for v in range(3):
        assert int((cycle3.src == v).sum()) == sum(1 for s, _ in paths if s == v + 1)


def test_cycle3_long_path_times_beta_vanishes(cycle3):
    # the longest basis path from vertex 2 has length 8; the length-9 word reduces to zero
    longest = max((b for b in range(cycle3.dim) if cycle3.src[b] == 1), key=lambda b: cycle3.lengths[b])
    assert cycle3.lengths[longest] == 8
    prod = cycle3.multiply(cycle3.path_vector(cycle3.path_label(longest)), cycle3.path_vector("alpha"))
    assert not prod.any()
    # extending the length-8 path "beta ... gamma" by alpha gives the relation word
    word = cycle3.path_label(longest) + ".alpha"
    assert not cycle3.path_vector(word).any()


def test_commutative_square_dimension():
    # a.b = c.d over the square 1 -> 2 -> 4, 1 -> 3 -> 4; hand count 4 + 4 + 1
    q = Quiver(4, (Arrow("a", 1, 2), Arrow("b", 2, 4), Arrow("c", 1, 3), Arrow("d", 3, 4)))
    rel = Relation(((1, PathWord(1, ("a", "b"))), (-1, PathWord(1, ("c", "d")))))
    alg = build_algebra(q, [rel], 101)
    assert alg.dim == 9
    assert np.array_equal(alg.path_vector("a.b"), alg.path_vector("c.d"))


def test_loop_without_relations_is_infinite():
    with pytest.raises(NotFiniteDimensional):
        parse_algebra("vertices 1\narrow x 1 1\nprime 101\n")


def test_short_relation_rejected():
    with pytest.raises(NotAdmissible):
        parse_algebra("vertices 2\narrow a 1 2\nrelation 1*a\nprime 101\n")


def test_composite_prime_rejected():
    with pytest.raises(NotPrime):
        parse_algebra("vertices 2\narrow a 1 2\nprime 100\n")


def test_bad_arrow_endpoint():
    with pytest.raises(ParseError):
        parse_algebra("vertices 2\narrow a 1 3\nprime 101\n")


def test_unit_laws(a2):
    e1, e2, a = (a2.path_vector(t) for t in ("e1", "e2", "a"))
    assert np.array_equal(a2.multiply(e1, e1), e1)
    assert np.array_equal(a2.multiply(a, e2), a)
    assert np.array_equal(a2.multiply(e1, a), a)
    assert not a2.multiply(a, e1).any()


@pytest.mark.parametrize("name", ["a2", "a3", "kronecker2", "cycle3", "semisimple2"])
def test_identity_and_relations(name):
    alg = builtin_algebra(name)
    one = alg.one()
    for b in range(alg.dim):
        x = np.zeros(alg.dim, dtype=np.int64)
        x[b] = 1
        assert np.array_equal(alg.multiply(one, x), x)
        assert np.array_equal(alg.multiply(x, one), x)
    for rel in alg.relations:
        total = sum(c * alg.path_vector(".".join(pw.arrows)) for c, pw in rel.terms) % alg.prime
        assert not total.any()


@given(st.data())
def test_associativity(cycle3, data):
    d = cycle3.dim
    idx = st.integers(0, d - 1)
    x, y, z = (np.eye(d, dtype=np.int64)[data.draw(idx)] for _ in range(3))
    m = cycle3.multiply
    assert np.array_equal(m(m(x, y), z), m(x, m(y, z)))


def test_idempotents_orthogonal(a3):
    e = [a3.idempotent(i) for i in range(3)]
    for i in range(3):
        for j in range(3):
            prod = a3.multiply(e[i], e[j])
            assert np.array_equal(prod, e[i] if i == j else 0 * prod)


def test_deterministic_basis():
    t = builtin_algebra("cycle3").to_text()
    assert parse_algebra(t).basis == parse_algebra(t).basis
    assert parse_algebra(t).fingerprint == builtin_algebra("cycle3").fingerprint


def test_opposite_has_same_dimension(cycle3):
    assert cycle3.opposite.dim == cycle3.dim
