"""Finitely generated abelian groups and homomorphisms between them.

A group is a list of cyclic factors ``Z/d`` (``d == 0`` meaning ``Z``);
elements are integer vectors and homomorphisms are integer matrices acting
on column vectors.  Matrix entries are reduced modulo the target factor of
their row, so equality of reduced matrices is equality of homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

Matrix = list[list[int]]


class AbelianGroupError(ValueError):
    pass


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def smith_normal_form(A: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` diagonal, ``U`` and ``V`` unimodular.

    Diagonal entries are non-negative and each divides the next.
    """
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    D = [list(r) for r in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            # clear column t, then row t; a nonzero remainder becomes the new pivot
            moved = False
            for i in range(t + 1, m):
                q = D[i][t] // D[t][t]
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    swap_rows(t, i)
                    moved = True
                    break
            if moved:
                continue
            for j in range(t + 1, n):
                q = D[t][j] // D[t][t]
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    swap_cols(t, j)
                    moved = True
                    break
            if moved:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return U, D, V


def integer_kernel(A: Matrix, ncols: int) -> Matrix:
    """Columns of a saturated basis of ``{v in Z^ncols : A v = 0}``."""
    if not A:
        return identity_matrix(ncols)
    _, D, V = smith_normal_form(A, ncols)
    rank = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [row[rank:] for row in V]


def left_inverse(B: Matrix) -> Matrix:
    """Integer ``P`` with ``P B = I`` for a saturated basis ``B`` given as columns."""
    r = len(B[0]) if B else 0
    if r == 0:
        return []
    U, D, V = smith_normal_form(B, r)
    if any(D[i][i] != 1 for i in range(r)):
        raise AbelianGroupError("basis does not span a saturated sublattice")
    # B = U^-1 [I; 0] V^-1, so P = V [I 0] U
    return matmul(V, U[:r])


@dataclass(frozen=True)
class FgAbGroup:
    """``Z/d_1 + ... + Z/d_r`` in a fixed cyclic decomposition (``d = 0`` is ``Z``)."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.factors)
        if any(d < 0 for d in factors):
            raise AbelianGroupError(f"negative factor in {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls((0,) * rank)

    @classmethod
    def cyclic(cls, d: int) -> "FgAbGroup":
        return cls((d,))

    @property
    def rank(self) -> int:
        """Number of cyclic coordinates."""
        return len(self.factors)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical form via Smith normal form: torsion factors ascending, then zeros."""
        n = len(self.factors)
        _, D, _ = smith_normal_form([[d if i == j else 0 for j in range(n)]
                                     for i, d in enumerate(self.factors)], n)
        diag = [D[i][i] for i in range(n)]
        return tuple(sorted(d for d in diag if d > 1)) + tuple(d for d in diag if d == 0)

    def is_isomorphic(self, other: "FgAbGroup") -> bool:
        return self.invariant_factors == other.invariant_factors

    @property
    def order(self) -> int | None:
        """Cardinality, or None when infinite."""
        n = 1
        for d in self.factors:
            if d == 0:
                return None
            n *= d
        return n

    @property
    def is_trivial(self) -> bool:
        return all(d == 1 for d in self.factors)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(x % d if d else x for x, d in zip(v, self.factors))

    def elements(self):
        if self.order is None:
            raise AbelianGroupError("group is infinite")
        return product(*(range(d) for d in self.factors))

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup(self.factors + other.factors)

    def __repr__(self):
        if not self.factors:
            return "0"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.factors)


class AbHom:
    """A homomorphism given by an integer matrix (target rank x source rank)."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix: Sequence[Sequence[int]],
                 check: bool = True):
        M = [[int(x) for x in row] for row in matrix]
        if len(M) != target.rank or any(len(r) != source.rank for r in M):
            raise AbelianGroupError(
                f"matrix shape does not match {target.rank}x{source.rank}")
        self.source = source
        self.target = target
        self.matrix = [[x % e if e else x for x in row] for row, e in zip(M, target.factors)]
        if check:
            self.check_well_defined()

    def check_well_defined(self) -> None:
        for j, d in enumerate(self.source.factors):
            for i, e in enumerate(self.target.factors):
                v = d * self.matrix[i][j]
                if (v % e if e else v) != 0:
                    raise AbelianGroupError(
                        f"not well defined: column {j} (Z/{d}) into row {i} (Z/{e})")

    @classmethod
    def identity(cls, A: FgAbGroup) -> "AbHom":
        return cls(A, A, identity_matrix(A.rank), check=False)

    @classmethod
    def zero(cls, A: FgAbGroup, B: FgAbGroup) -> "AbHom":
        return cls(A, B, [[0] * A.rank for _ in range(B.rank)], check=False)

    @classmethod
    def scalar(cls, A: FgAbGroup, c: int) -> "AbHom":
        return cls(A, A, [[c * int(i == j) for j in range(A.rank)] for i in range(A.rank)])

    def __matmul__(self, other: "AbHom") -> "AbHom":
        """Composite ``self o other``."""
        if other.target != self.source:
            raise AbelianGroupError(f"cannot compose: {self.source} != {other.target}")
        A, B = self.matrix, other.matrix
        inner = range(self.source.rank)
        M = [[sum(A[i][k] * B[k][j] for k in inner) for j in range(other.source.rank)]
             for i in range(self.target.rank)]
        return AbHom(other.source, self.target, M, check=False)

    def _same_shape(self, other: "AbHom") -> None:
        if self.source != other.source or self.target != other.target:
            raise AbelianGroupError("homomorphisms have different source or target")

    def __add__(self, other: "AbHom") -> "AbHom":
        self._same_shape(other)
        return AbHom(self.source, self.target,
                     [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
                     check=False)

    def __sub__(self, other: "AbHom") -> "AbHom":
        self._same_shape(other)
        return AbHom(self.source, self.target,
                     [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
                     check=False)

    def __eq__(self, other):
        if not isinstance(other, AbHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, tuple(map(tuple, self.matrix))))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce([sum(a * x for a, x in zip(row, v)) for row in self.matrix])

    def is_identity(self) -> bool:
        return self.source == self.target and self == AbHom.identity(self.source)

    def __repr__(self):
        return f"AbHom({self.source} -> {self.target}, {self.matrix})"


def hom_sum(homs: Sequence[AbHom], source: FgAbGroup, target: FgAbGroup) -> AbHom:
    total = AbHom.zero(source, target)
    for h in homs:
        total = total + h
    return total


def block_diagonal(homs: Sequence[AbHom]) -> AbHom:
    source = FgAbGroup(sum((h.source.factors for h in homs), ()))
    target = FgAbGroup(sum((h.target.factors for h in homs), ()))
    M = [[0] * source.rank for _ in range(target.rank)]
    r = c = 0
    for h in homs:
        for i, row in enumerate(h.matrix):
            M[r + i][c:c + len(row)] = row
        r += h.target.rank
        c += h.source.rank
    return AbHom(source, target, M, check=False)
