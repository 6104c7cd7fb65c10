import json

import pytest

from equivar.abelian import AbHom, FgAbGroup
from equivar.gset import coset_gset, induce, orbits_decompose, restrict
from equivar.mackey import (Cover, MackeyError, MackeyFunctor, burnside_mackey, check_mackey, direct_sum,
                            fixed_point_mackey, green_check, permutation_matrices, tamper)
from equivar.perm import STANDARD_GROUPS, Permutation, Subgroup, builtin_group, subgroup_classes


def basis_subgroup(M, H, b):
    """The subgroup V <= H with [H/V] the b-th basis element of M(H) in canonical coordinates."""
    i, g = M.table.lookup(H)
    U = subgroup_classes(M.table[i])[b]
    return U.conjugate(g.inverse())


def coordinates(M, H, X):
    """Coordinates of an H-set X in the canonical basis of M(H)."""
    i, g = M.table.lookup(H)
    local = subgroup_classes(M.table[i])
    v = [0] * len(local)
    for o in orbits_decompose(X).orbits:
        v[local.index(o.stabilizer.conjugate(g))] += 1
    return v


def column(h, b):
    return [row[b] for row in h.matrix]


@pytest.mark.parametrize("name", ["S3", "D4", "A4", "Q8"])
def test_burnside_functor_matches_gset_operations(name):
    G = builtin_group(name)
    M = burnside_mackey(G)
    T = M.table
    for K in T.all_subgroups:
        for H in T.subgroups_of(K):
            res, tr = M.eval_res(H, K), M.eval_tr(H, K)
            for b in range(M.level_of(K).rank):
                X = restrict(coset_gset(K, basis_subgroup(M, K, b)), H)
                assert column(res, b) == coordinates(M, H, X)
            for b in range(M.level_of(H).rank):
                Y = induce(coset_gset(H, basis_subgroup(M, H, b)), K)
                assert column(tr, b) == coordinates(M, K, Y)
        for x in G.elements[::3]:
            c = M.eval_conj(x, K)
            xK = K.conjugate(x)
            for b in range(M.level_of(K).rank):
                V = basis_subgroup(M, K, b).conjugate(x)
                assert column(c, b) == coordinates(M, xK, coset_gset(xK, V))


def test_s3_restriction_to_c3():
    G = builtin_group("S3")
    M = burnside_mackey(G)
    T = M.table
    res = M.eval_res(T[2], T[3])
    # [S3/C2] restricts to the free C3-orbit
    assert column(res, 1) == [1, 0]


def test_c2_example():
    M = burnside_mackey(builtin_group("C2"))
    e, C2 = M.table[0], M.table[1]
    assert M.eval_tr(e, C2).matrix == [[1], [0]]
    assert M.eval_res(e, C2).matrix == [[2, 1]]
    assert M.eval_res(C2, C2).is_identity()


@pytest.mark.parametrize("name", STANDARD_GROUPS)
def test_burnside_functor_passes(name):
    r = check_mackey(burnside_mackey(builtin_group(name)))
    assert r.passed
    assert {"res_transitivity", "tr_transitivity", "conj_functorial", "conj_inner_trivial", "conj_res",
            "conj_tr", "double_coset"} <= set(r.counts())


def test_trivial_group():
    M = burnside_mackey(builtin_group("e"))
    assert [L.factors for L in M.levels] == [(0,)]
    assert check_mackey(M).passed


def test_tampered_transfer_fails_with_witness():
    M = burnside_mackey(builtin_group("C2"))
    bad = tamper(M, "tr", 0, 0, 0)
    r = check_mackey(bad)
    assert not r.passed
    kinds = {e.kind for e in r.failures()}
    assert "double_coset" in kinds
    w = next(e.witness for e in r.failures() if e.kind == "double_coset")
    assert w["lhs"] != w["rhs"] and "double_coset_reps" in w


def test_fixed_point_sign_representation():
    G = builtin_group("C2")
    F = fixed_point_mackey(G, [[[-1]]])
    assert [L.factors for L in F.levels] == [(0,), ()]
    e, C2 = F.table[0], F.table[1]
    assert (F.eval_res(e, C2) @ F.eval_tr(e, C2)).matrix == [[0]]
    assert check_mackey(F).passed


def test_fixed_point_trivial_representation():
    G = builtin_group("S3")
    F = fixed_point_mackey(G, [[[1]]] * len(G.generators))
    T = F.table
    for K in T:
        for H in T.subgroups_of(K):
            assert F.eval_tr(H, K).matrix == [[K.order // H.order]]
            assert F.eval_res(H, K).matrix == [[1]]


@pytest.mark.parametrize("name,ranks", [("S3", [3, 2, 1, 1]), ("C4", [4, 2, 1]), ("A4", [4, 2, 2, 1, 1])])
def test_permutation_representation(name, ranks):
    G = builtin_group(name)
    F = fixed_point_mackey(G, permutation_matrices(G))
    assert [L.rank for L in F.levels] == ranks
    assert check_mackey(F).passed


def test_bad_representation_rejected():
    G = builtin_group("C3")
    with pytest.raises(MackeyError):
        fixed_point_mackey(G, [[[-1]]])


def test_green_functor():
    for name in ("e", "C2", "S3", "D4"):
        assert green_check(builtin_group(name)).passed
    M = burnside_mackey(builtin_group("C2"))
    e, C2 = M.table[0], M.table[1]
    # tr([e/e] . res[C2/e]) = tr(2 [e/e]) = 2 [C2/e]
    assert M.eval_tr(e, C2).apply(M.eval_res(e, C2).apply([1, 0])) == (2, 0)


def test_direct_sum_and_json():
    G = builtin_group("S3")
    B = burnside_mackey(G)
    D = direct_sum([B, B])
    assert [L.rank for L in D.levels] == [2 * L.rank for L in B.levels]
    assert check_mackey(D).passed
    R = MackeyFunctor.from_json(json.loads(json.dumps(B.to_json())))
    assert R.to_json() == B.to_json()
    assert check_mackey(R).passed


def test_malformed_functors():
    G = builtin_group("C2")
    B = burnside_mackey(G)
    data = B.to_json()
    with pytest.raises(MackeyError):
        MackeyFunctor.from_json(dict(data, levels=data["levels"][:1]))
    with pytest.raises(MackeyError):
        MackeyFunctor.from_json(dict(data, maps=[m for m in data["maps"] if m["kind"] != "tr"]))
    with pytest.raises(MackeyError):
        MackeyFunctor(G, B.levels, [], B.weyl)
    bad_weyl = [m for m in data["maps"] if m["kind"] != "weyl"]
    bad_weyl.append({"kind": "weyl", "from": 0, "to": 0, "element": [1, 0], "matrix": [[2]]})
    with pytest.raises(MackeyError):
        MackeyFunctor.from_json(dict(data, maps=bad_weyl))
    with pytest.raises(MackeyError):
        B.eval_res(B.table[1], B.table[0])


def test_weyl_action_must_be_group_action():
    G = builtin_group("C4")
    B = burnside_mackey(G)
    # the Weyl group of the trivial subgroup is C4; doubling has infinite order
    weyl = list(B.weyl)
    w = next(x for x in weyl if x.level == 0)
    weyl[weyl.index(w)] = type(w)(0, w.element, AbHom.scalar(B.levels[0], 2))
    with pytest.raises(MackeyError):
        MackeyFunctor(G, B.levels, B.covers, weyl)
