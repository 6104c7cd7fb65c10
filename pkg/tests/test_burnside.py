import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from equivar.burnside import (BurnsideElement, Span, SpanError, SpanSizeError, burnside_multiply,
                              burnside_unit, compose_spans, random_gset, random_span, spans_isomorphic,
                              structure_constants, table_of_marks, weyl_orders)
from equivar.gset import GMap, GSet, coset_gset, gset_product, orbits_decompose, point, to_point
from equivar.perm import STANDARD_GROUPS, builtin_group, subgroup_classes


def test_marks_small():
    assert table_of_marks(builtin_group("e")).matrix == ((1,),)
    assert table_of_marks(builtin_group("C2")).matrix == ((2, 1), (0, 1))
    s3 = table_of_marks(builtin_group("S3"))
    assert [s3.matrix[i][i] for i in range(4)] == [6, 1, 2, 1]
    assert s3.matrix == ((6, 3, 2, 1), (0, 1, 0, 1), (0, 0, 2, 1), (0, 0, 0, 1))


@pytest.mark.parametrize("name", STANDARD_GROUPS)
def test_marks_against_brute_force(name):
    G = builtin_group(name)
    T = subgroup_classes(G)
    tom = table_of_marks(G)
    for i, H in enumerate(T):
        for j, K in enumerate(T):
            if G.order <= 12:
                assert tom.matrix[i][j] == oracles.marks(oracles.elements(H), oracles.elements(K), G.whole)
    low = tom.by_gsets()
    n = len(low)
    assert all(low[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    assert [low[i][i] for i in range(n)] == weyl_orders(G)
    assert weyl_orders(G) == [oracles.normalizer_order(oracles.elements(R), G.whole) // R.order for R in T]


def test_products():
    C2 = builtin_group("C2")
    free = BurnsideElement.basis(C2, 0)
    assert (free * free).coefficients == (2, 0)
    S3 = builtin_group("S3")
    x = BurnsideElement.basis(S3, 1)
    assert (x * x).coefficients == (1, 1, 0, 0)
    u = burnside_unit(S3)
    assert (u * x) == x


@pytest.mark.parametrize("name", ["C4", "S3", "D4", "A4"])
def test_structure_constants_against_gset_products(name):
    G = builtin_group(name)
    T = subgroup_classes(G)
    c = structure_constants(G)
    for i, H in enumerate(T):
        for j, K in enumerate(T):
            counts = orbits_decompose(gset_product(coset_gset(G, H), coset_gset(G, K))).class_counts()
            assert [counts.get(k, 0) for k in range(len(T))] == c[i][j]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(STANDARD_GROUPS), st.data())
def test_marks_multiplicative(name, data):
    G = builtin_group(name)
    n = len(subgroup_classes(G))
    a = BurnsideElement.make(G, data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n)))
    b = BurnsideElement.make(G, data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n)))
    tom = table_of_marks(G)
    assert tom.marks(a * b) == tuple(x * y for x, y in zip(tom.marks(a), tom.marks(b)))
    assert a * b == b * a


def test_gset_round_trip():
    G = builtin_group("S3")
    a = BurnsideElement.make(G, [1, 0, 2, 1])
    assert BurnsideElement.of_gset(a.to_gset()) == a
    with pytest.raises(ValueError):
        BurnsideElement.make(G, [-1, 0, 0, 0]).to_gset()
    with pytest.raises(ValueError):
        BurnsideElement.make(G, [1, 0])


def test_span_direct_sum_example():
    C2 = builtin_group("C2")
    T = subgroup_classes(C2)
    free, pt = coset_gset(C2, T[0]), point(C2)
    s1 = Span(to_point(free), GMap.identity(free))     # G/G <- G/e -> G/e, from the point
    s2 = Span(GMap.identity(free), to_point(free))     # G/e <- G/e -> G/G, to the point
    comp = compose_spans(s1, s2)   # G/e -> G/G -> G/e, pulled back over the point
    assert comp.apex.size == 4
    assert sorted(o.class_index for o in orbits_decompose(comp.apex).orbits) == [0, 0]
    assert comp.source == free and comp.target == free


def test_spans_over_trivial_group_are_matrices():
    e = builtin_group("e")
    rng = random.Random(5)

    def counts(s):
        M = [[0] * s.target.size for _ in range(s.source.size)]
        for p in range(s.apex.size):
            M[s.left_leg(p)][s.right_leg(p)] += 1
        return M

    for _ in range(30):
        X, Y, Z = (GSet.trivial(e, rng.randint(1, 3)) for _ in range(3))
        f, g = random_span(X, Y, rng), random_span(Y, Z, rng)
        A, B = counts(f), counts(g)
        prod = [[sum(A[i][k] * B[k][j] for k in range(Y.size)) for j in range(Z.size)] for i in range(X.size)]
        assert counts(compose_spans(g, f)) == prod


def test_span_isomorphism():
    G = builtin_group("S3")
    T = subgroup_classes(G)
    X = coset_gset(G, T[1])
    s = Span(GMap.identity(X), GMap.identity(X))
    assert spans_isomorphic(s, s)
    Y = coset_gset(G, T[2])
    P = gset_product(X, X)
    t = Span(GMap(P, X, [i // 3 for i in range(9)]), GMap(P, X, [i % 3 for i in range(9)]))
    u = Span(GMap(P, X, [i % 3 for i in range(9)]), GMap(P, X, [i // 3 for i in range(9)]))
    assert spans_isomorphic(t, u)  # swap symmetry of the square
    assert not spans_isomorphic(s, t)
    with pytest.raises(SpanSizeError):
        spans_isomorphic(t, u, max_apex=4)
    with pytest.raises(SpanError):
        compose_spans(s, Span(GMap.identity(Y), GMap.identity(Y)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["C2", "C3", "C4", "C2xC2", "S3", "C6"]), st.integers(0, 10 ** 6))
def test_span_category_laws(name, seed):
    rng = random.Random(seed)
    G = builtin_group(name)
    W, X, Y, Z = (random_gset(G, rng, 4) for _ in range(4))
    f, g, h = random_span(W, X, rng), random_span(X, Y, rng), random_span(Y, Z, rng)
    left = compose_spans(h, compose_spans(g, f))
    right = compose_spans(compose_spans(h, g), f)
    assert spans_isomorphic(left, right, max_apex=10 ** 6)
    assert spans_isomorphic(compose_spans(Span.identity(X), f), f)
    assert spans_isomorphic(compose_spans(f, Span.identity(W)), f)
