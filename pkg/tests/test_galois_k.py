import pytest
from hypothesis import given, settings, strategies as st

import oracles
from equivar.ffield import FieldError, GF
from equivar.galois_k import build_model, compare_fixed_points, descent_e2, verify_model
from equivar.mackey import check_mackey

QS = [2, 3, 4, 5, 7, 8, 9]


def maps(model, small, big):
    M = model.functor
    H = M.table[model.class_of_degree(big)]
    K = M.table[model.class_of_degree(small)]
    return M.eval_res(H, K), M.eval_tr(H, K)


def test_q2_n2():
    m = build_model(2, 2, 1)
    assert m.level(2).factors == (0, 3) and m.level(1).factors == (0, 1)
    F, V = maps(m, 1, 2)
    assert F.matrix[1][1] == 0 and V.matrix[1][1] == 0
    assert verify_model(m).passed


def test_q3_n2():
    m = build_model(3, 2, 1)
    F, V = maps(m, 1, 2)
    assert F.source.factors == (0, 2) and F.target.factors == (0, 8)
    assert F.matrix == [[1, 0], [0, 4]]
    assert V.matrix == [[2, 0], [0, 1]]
    assert (F @ V).matrix[1][1] == 4 == 1 + 3


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("n", range(1, 7))
def test_vf_on_k0(q, n):
    m = build_model(q, n, 0)
    F, V = maps(m, 1, n)
    assert (V @ F).matrix == [[n]]


@pytest.mark.parametrize("q", QS)
def test_grid(q):
    for n in range(1, 7):
        r = verify_model(build_model(q, n, 3))
        assert r.passed, r.failures()[:1]


def test_non_prime_power():
    with pytest.raises(FieldError):
        build_model(6, 2, 1)


def test_fixed_points_examples():
    rows = {(r.small, r.big): r for r in compare_fixed_points(build_model(3, 2, 1), 1)}
    r = rows[(1, 2)]
    assert r.fixed_order == 2 == r.image_F_order and r.F_onto_fixed
    rows = {(r.small, r.big): r for r in compare_fixed_points(build_model(2, 2, 1), 1)}
    assert rows[(1, 2)].fixed_order == 1 == rows[(1, 2)].image_F_order
    (only,) = compare_fixed_points(build_model(5, 1, 1), 1)
    assert only.F_onto_fixed and only.V_from_coinvariants_iso


@pytest.mark.parametrize("q,n,i", [(2, 3, 2), (3, 4, 1), (4, 2, 2), (5, 3, 1), (9, 2, 1), (2, 6, 2)])
def test_fixed_points_brute_force(q, n, i):
    for r in compare_fixed_points(build_model(q, n, i), i):
        m, s = r.modulus, q ** (r.small * i) - 1
        psi = pow(q, r.small * i, m)
        fixed = {x for x in range(m) if (psi * x - x) % m == 0}
        image_f = {(x * (m // s)) % m for x in range(s)}
        coinv = m // len({((psi - 1) * x) % m for x in range(m)})
        assert len(fixed) == r.fixed_order and len(image_f) == r.image_F_order
        assert coinv == r.coinvariants_order
        assert image_f <= fixed


def test_descent_examples():
    e = descent_e2(build_model(2, 2, 1), 1)
    assert e.modulus == 3 and e.even.order == 1 and e.odd.order == 1
    e = descent_e2(build_model(3, 2, 1), 1)
    assert e.modulus == 8 and e.even.order == 1 and e.odd.order == 1
    # trivial group: Tate groups vanish, ordinary invariants are everything
    e = descent_e2(build_model(3, 1, 2), 2)
    assert e.invariants.order == 8 and e.even.order == 1 and e.odd.order == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(QS), st.integers(1, 6), st.integers(1, 3))
def test_descent_against_brute_force(q, n, i):
    m = q ** (n * i) - 1
    if m > 5000:
        return
    e = descent_e2(build_model(q, n, i), i)
    even, odd, inv = oracles.tate_orders(m, q ** i, n)
    assert (e.even.order, e.odd.order, e.invariants.order) == (even, odd, inv)
    assert e.odd.order == 1


@pytest.mark.parametrize("q,a", [(2, 3), (3, 2), (5, 1), (4, 2), (7, 2)])
def test_k1_orders_match_unit_groups(q, a):
    m = build_model(q, a, 1)
    p = 2 if q in (2, 4, 8) else 3 if q in (3, 9) else q
    e = {2: 1, 4: 2, 8: 3, 3: 1, 9: 2}.get(q, 1)
    F = GF(p, e * a)
    units = sum(1 for y in F.elements() if not y.is_zero())
    assert m.k_odd(a, 1) == units == m.level(a).factors[1]


def test_verify_model_report_kinds():
    r = verify_model(build_model(3, 4, 2))
    assert {"FV_sum", "VF_index", "FV_closed_form", "double_coset"} <= set(r.counts())
    assert check_mackey(build_model(4, 6, 1).functor).passed
