import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from equivar.gset import (GMap, GSet, GSetError, are_isomorphic, coinduce, coset_gset, count_gmaps,
                          disjoint_union, fixed_points, gmaps, gset_from_json, gset_product, induce,
                          orbit_category, orbits_decompose, point, pullback, restrict, to_point)
from equivar.burnside import random_gset
from equivar.perm import (STANDARD_GROUPS, Permutation, Subgroup, builtin_group, double_cosets,
                          subgroup_classes)


def c2():
    G = builtin_group("C2")
    T = subgroup_classes(G)
    return G, T[0], T[1]


def test_coset_gsets():
    G = builtin_group("S3")
    T = subgroup_classes(G)
    X = coset_gset(G, T[1])
    assert X.size == 3 and len(orbits_decompose(X)) == 1
    assert coset_gset(G, G.whole).size == 1
    C2, e, _ = c2()
    Y = coset_gset(C2, e)
    assert Y.size == 2 and Y.action[C2.elements[1]] == (1, 0)


def test_orbits():
    G = builtin_group("S3")
    triv = GSet.trivial(G, 5)
    orbs = orbits_decompose(triv)
    assert len(orbs) == 5 and all(o.stabilizer == G.whole for o in orbs.orbits)
    reg = coset_gset(G, G.trivial)
    (o,) = orbits_decompose(reg).orbits
    assert o.stabilizer.order == 1
    for H in subgroup_classes(G):
        (o,) = orbits_decompose(coset_gset(G, H)).orbits
        assert o.stabilizer == H


def test_fixed_points():
    C2, e, full = c2()
    X = coset_gset(C2, e)
    assert fixed_points(X, e) == [0, 1]
    assert fixed_points(X, full) == []
    G = builtin_group("D4")
    T = subgroup_classes(G)
    for H in T:
        for K in T:
            n = len(fixed_points(coset_gset(G, K), H))
            assert n == oracles.marks(oracles.elements(H), oracles.elements(K), G.whole)


def test_pullback_of_free_orbits():
    C2, e, _ = c2()
    X = coset_gset(C2, e)
    P, p1, p2 = pullback(to_point(X), to_point(X))
    assert P.size == 4
    assert sorted(o.class_index for o in orbits_decompose(P).orbits) == [0, 0]
    assert are_isomorphic(P, disjoint_union(X, X))
    assert not are_isomorphic(disjoint_union(X, X), disjoint_union(X, point(C2), point(C2)))
    ident = GMap.identity(X)
    Q, _, _ = pullback(ident, ident)
    assert are_isomorphic(Q, X)


def test_pullback_matches_double_cosets_s3():
    G = builtin_group("S3")
    T = subgroup_classes(G)
    X = coset_gset(G, T[1])
    P, _, _ = pullback(to_point(X), to_point(X))
    got = sorted(o.class_index for o in orbits_decompose(P).orbits)
    assert got == sorted(T.index(a) for a, _ in double_cosets(T[1], T[1], G).intersections) == [0, 1]


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_product_orbits_against_brute_force(name):
    G = builtin_group(name)
    T = subgroup_classes(G)
    classes = oracles.subgroup_classes(G.whole)
    # match class numbering through the representatives
    relabel = {oracles.class_of(oracles.elements(R), classes): i for i, R in enumerate(T)}
    for H in T:
        for K in T:
            P = gset_product(coset_gset(G, H), coset_gset(G, K))
            got = sorted(o.class_index for o in orbits_decompose(P).orbits)
            brute = oracles.product_orbit_classes(oracles.elements(H), oracles.elements(K), G.whole, classes)
            assert got == sorted(relabel[c] for c in brute)


def test_induce_and_coinduce():
    C2, e, _ = c2()
    X = GSet.trivial(e, 3)
    Y = induce(X, C2)
    assert Y.size == 6 and all(o.stabilizer.order == 1 for o in orbits_decompose(Y).orbits)
    Z = coinduce(GSet.trivial(e, 2), C2)
    assert Z.size == 4 and len(fixed_points(Z, C2.whole)) == 2
    assert induce(point(e), C2).size == 2
    assert coinduce(point(e), C2).size == 1
    assert are_isomorphic(induce(X, e), X) and are_isomorphic(coinduce(X, e), X)


def test_coinduce_fixed_points_count():
    # Map_H(K, X)^K = X^H
    G = builtin_group("S3")
    T = subgroup_classes(G)
    X = restrict(coset_gset(G, T[0]), T[1])
    assert len(fixed_points(coinduce(X, G), G.whole)) == len(fixed_points(X, T[1]))


def test_gmaps_counts():
    C2, e, full = c2()
    free, pt = coset_gset(C2, e), point(C2)
    assert count_gmaps(free, free) == 2
    assert count_gmaps(free, pt) == 1
    assert count_gmaps(pt, free) == 0
    G = builtin_group("S3")
    R = coset_gset(G, G.trivial)
    assert count_gmaps(R, R) == 6 == len(list(gmaps(R, R)))


def test_orbit_category_small():
    C2, _, _ = c2()
    O = orbit_category(C2)
    assert [len(O.hom(a, b)) for a in range(2) for b in range(2)] == [2, 1, 0, 1]
    assert len(orbit_category(builtin_group("e"))) == 1
    O3 = orbit_category(builtin_group("S3"))
    assert len(O3.hom(0, 0)) == 6


@pytest.mark.parametrize("name", STANDARD_GROUPS)
def test_orbit_category_hom_counts(name):
    G = builtin_group(name)
    T = subgroup_classes(G)
    O = orbit_category(G)
    for a, H in enumerate(T):
        for b, K in enumerate(T):
            assert len(O.hom(a, b)) == count_gmaps(coset_gset(G, H), coset_gset(G, K))


def test_validation_errors():
    G = builtin_group("S3")
    with pytest.raises(GSetError):
        GSet.from_generators(G, 2, [[1, 0]])
    with pytest.raises(GSetError):
        GSet.from_generators(builtin_group("C3"), 2, [[1, 0]])
    C2, e, _ = c2()
    with pytest.raises(GSetError):
        GMap(coset_gset(C2, e), coset_gset(C2, e), [0, 0])
    with pytest.raises(GSetError):
        gset_from_json({"size": 2})


def test_json_round_trip():
    G = builtin_group("A4")
    X = coset_gset(G, subgroup_classes(G)[2])
    Y = gset_from_json(dict(X.to_json(), group="A4"))
    assert Y == X


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["C4", "S3", "C2xC2", "D4"]), st.integers(0, 10 ** 6))
def test_isomorphism_invariant_under_relabelling(name, seed):
    rng = random.Random(seed)
    G = builtin_group(name)
    X = random_gset(G, rng, 10)
    perm = list(range(X.size))
    rng.shuffle(perm)
    inv = [0] * X.size
    for i, p in enumerate(perm):
        inv[p] = i
    Y = GSet(G, X.size, {g: tuple(perm[a[inv[y]]] for y in range(X.size)) for g, a in X.action.items()})
    assert are_isomorphic(X, Y)
    assert count_gmaps(X, Y) == len(list(gmaps(X, Y)))
