import pytest
from hypothesis import given, settings, strategies as st

from equivar.abelian import (AbelianGroupError, AbHom, FgAbGroup, block_diagonal, integer_kernel,
                             left_inverse, matmul, smith_normal_form)

small = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def det(M):
    # Laplace expansion; only used on tiny unimodular checks
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


@settings(max_examples=150)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_normal_form(r, c, data):
    A = data.draw(matrices(r, c))
    U, D, V = smith_normal_form(A, c)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=100)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_integer_kernel_is_saturated(r, c, data):
    A = data.draw(matrices(r, c))
    B = integer_kernel(A, c)
    k = len(B[0]) if B and B[0] else 0
    assert all(all(v == 0 for v in row) for row in matmul(A, B)) if k else True
    if k:
        P = left_inverse(B)
        assert matmul(P, B) == [[int(i == j) for j in range(k)] for i in range(k)]


def test_kernel_examples():
    assert integer_kernel([[2, 0]], 2) == [[0], [1]] or integer_kernel([[2, 0]], 2) == [[0], [-1]]
    assert integer_kernel([], 2) == [[1, 0], [0, 1]]
    B = integer_kernel([[1, 1]], 2)
    assert len(B[0]) == 1 and abs(B[0][0]) == 1 and B[0][0] == -B[1][0]


def test_invariant_factors():
    assert FgAbGroup((2, 3)).invariant_factors == (6,)
    assert FgAbGroup((4, 6, 0)).invariant_factors == (2, 12, 0)
    assert FgAbGroup((2, 3)).is_isomorphic(FgAbGroup((6,)))
    assert not FgAbGroup((2, 2)).is_isomorphic(FgAbGroup((4,)))
    assert FgAbGroup((1, 1)).is_trivial
    assert FgAbGroup((4, 6)).order == 24
    assert FgAbGroup((0,)).order is None


def test_homs():
    Z8, Z2 = FgAbGroup.cyclic(8), FgAbGroup.cyclic(2)
    f = AbHom(Z2, Z8, [[4]])
    v = AbHom(Z8, Z2, [[1]])
    assert (f @ v).matrix == [[4]]
    assert (v @ f).matrix == [[0]]
    with pytest.raises(AbelianGroupError):
        AbHom(Z2, Z8, [[1]])
    assert AbHom(Z8, Z8, [[9]]).is_identity()
    assert (f + f).matrix == [[0]]
    assert AbHom.scalar(Z8, 3).apply([3]) == (1,)
    with pytest.raises(AbelianGroupError):
        AbHom(Z2, Z8, [[1, 2]])


def test_block_diagonal():
    Z, Z3 = FgAbGroup.free(1), FgAbGroup.cyclic(3)
    h = block_diagonal([AbHom.scalar(Z, 2), AbHom.scalar(Z3, 2)])
    assert h.source.factors == (0, 3)
    assert h.apply([1, 1]) == (2, 2)
