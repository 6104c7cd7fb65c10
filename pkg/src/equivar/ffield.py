"""Exact arithmetic in finite fields ``F_{p^m}``.

Polynomials are coefficient lists, constant term first.  ``F_{p^m}`` is
``F_p[x]`` modulo the canonical modulus: the lexicographically least monic
irreducible polynomial of degree ``m`` when coefficients are read constant
term first.  Elements are numbered by ``sum(c_i p^i)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from sympy import GF as SympyGF
from sympy.polys.matrices import DomainMatrix

FIELD_SIZE_LIMIT = 2 ** 20
SMALL_FIELD_LIMIT = 2 ** 16
NORM_FORM_LIMIT = 4096


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` for a prime ``p``, else None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over a field -----------------------------------------------------
#
# ``F`` supplies zero, one, add, sub, mul, inv and is_zero; PrimeField and
# GF both qualify, so the same routines serve F_p[x] and F_{p^b}[x].

class PrimeField:
    def __init__(self, p: int):
        self.p = p
        self.zero, self.one = 0, 1
        self.order = p

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def mul(self, a, b): return (a * b) % self.p
    def inv(self, a): return pow(a, -1, self.p)
    def is_zero(self, a): return a % self.p == 0


def poly_trim(F, a: list) -> list:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def poly_add(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return poly_trim(F, [F.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
                         for i in range(n)])


def poly_sub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero
    return poly_trim(F, [F.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
                         for i in range(n)])


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F, a, b):
    b = poly_trim(F, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = poly_trim(F, a)
    inv_lead = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        a = poly_trim(F, a)
    return poly_trim(F, q), a


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    if not a:
        return a
    c = F.inv(a[-1])
    return [F.mul(c, x) for x in a]


def poly_gcd(F, a, b):
    a, b = poly_trim(F, a), poly_trim(F, b)
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_powmod(F, base, e: int, mod):
    result = [F.one]
    base = poly_mod(F, base, mod)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return result


def is_irreducible(F, f) -> bool:
    """Rabin's test over a field with ``F.order`` elements."""
    f = poly_trim(F, f)
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [F.zero, F.one]
    q = F.order
    if poly_sub(F, poly_powmod(F, x, q ** m, f), x):
        return False
    for r in _prime_factors(m):
        h = poly_sub(F, poly_powmod(F, x, q ** (m // r), f), x)
        if len(poly_gcd(F, f, h)) != 1:
            return False
    return True


def distinct_degree_factorization(F, f) -> list[tuple[int, int]]:
    """``(degree, number of irreducible factors)`` for a squarefree ``f``."""
    f = poly_monic(F, poly_trim(F, f))
    x = [F.zero, F.one]
    h = x
    out = []
    k = 0
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        h = poly_powmod(F, h, F.order, f)
        g = poly_gcd(F, f, poly_sub(F, h, x))
        if len(g) > 1:
            out.append((k, (len(g) - 1) // k))
            f = poly_divmod(F, f, g)[0]
            h = poly_mod(F, h, f)
    if len(f) > 1:
        out.append((len(f) - 1, 1))
    return out


@lru_cache(maxsize=None)
def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree ``m`` over ``F_p``, coefficients constant first."""
    F = PrimeField(p)
    for low in product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(F, f):
            return tuple(f)
    raise FieldError(f"no irreducible of degree {m} over F_{p}")  # unreachable


# -- the field F_{p^m} --------------------------------------------------------------

class FqElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: "GF", coeffs: Sequence[int]):
        self.field = field
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        return self.field.add(self, self.field.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.sub(self.field.coerce(other), self)

    def __neg__(self):
        return self.field.sub(self.field.zero, self)

    def __mul__(self, other):
        return self.field.mul(self, self.field.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(self.field.coerce(other)))

    def __pow__(self, e: int):
        return self.field.pow(self, e)

    def inverse(self):
        return self.field.inv(self)

    def frobenius(self, k: int = 1):
        """``x -> x^(p^k)``."""
        return self.field.pow(self, self.field.p ** k)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_int(self) -> int:
        p = self.field.p
        return sum(c * p ** i for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.coerce(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}" if not i else f"{c}*{mono}")
        return " + ".join(reversed(terms)) or "0"


@lru_cache(maxsize=None)
def GF(p: int, m: int = 1) -> "_GF":
    return _GF(p, m)


class _GF:
    """The field ``F_{p^m}``; use :func:`GF` to get the shared instance."""

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if m < 1 or p ** m > FIELD_SIZE_LIMIT:
            raise FieldError(f"field size p^m must be at most {FIELD_SIZE_LIMIT}")
        self.p, self.m = p, m
        self.order = p ** m
        self.modulus = canonical_modulus(p, m)
        self._base = PrimeField(p)
        self.zero = FqElement(self, (0,) * m)
        self.one = FqElement(self, (1,) + (0,) * (m - 1))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def __call__(self, value) -> FqElement:
        return self.coerce(value)

    def coerce(self, value) -> FqElement:
        if isinstance(value, FqElement):
            if value.field is not self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElement(self, ((value % self.p),) + (0,) * (self.m - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = poly_mod(self._base, coeffs, list(self.modulus))
        return FqElement(self, tuple(coeffs) + (0,) * (self.m - len(coeffs)))

    def from_int(self, n: int) -> FqElement:
        coeffs = []
        for _ in range(self.m):
            n, r = divmod(n, self.p)
            coeffs.append(r)
        return FqElement(self, coeffs)

    @property
    def gen(self) -> FqElement:
        """The class of ``x``."""
        return self.coerce([0, 1])

    def elements(self) -> Iterator[FqElement]:
        for n in range(self.order):
            yield self.from_int(n)

    def _wrap(self, poly) -> FqElement:
        return FqElement(self, tuple(poly) + (0,) * (self.m - len(poly)))

    # field protocol used by the polynomial routines
    def add(self, a, b):
        p = self.p
        return FqElement(self, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a, b):
        p = self.p
        return FqElement(self, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def mul(self, a, b):
        prod = poly_mul(self._base, list(a.coeffs), list(b.coeffs))
        return self._wrap(poly_mod(self._base, prod, list(self.modulus)))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.order - 2)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def frobenius_matrix(self) -> list[list[int]]:
        """Matrix of ``x -> x^p`` over ``F_p`` in the power basis (columns = images)."""
        cols = [self._wrap([0] * i + [1]).frobenius().coeffs for i in range(self.m)]
        return [[cols[j][i] for j in range(self.m)] for i in range(self.m)]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 0
    K = SympyGF(p)
    M = DomainMatrix([[K(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), K)
    return M.rank()


def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{v : rows . v = 0}`` over ``F_p``, as integer vectors in ``[0, p)``."""
    K = SympyGF(p)
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    M = DomainMatrix([[K(int(x)) for x in r] for r in rows], (len(rows), ncols), K)
    basis = M.nullspace().to_list()
    return [[int(K.to_int(x)) % p for x in v] for v in basis]


# -- operations -------------------------------------------------------------------------

def field_ops(p: int, m: int) -> _GF:
    return GF(p, m)


def norm_and_trace(x: FqElement, a: int) -> tuple[FqElement, FqElement]:
    """Norm and trace from ``F_{p^m}`` to its degree-``a`` subfield.

    The results live in the big field; both are checked to be fixed by
    ``frobenius^a``, which characterizes the subfield.
    """
    F = x.field
    if a < 1 or F.m % a:
        raise FieldError(f"{a} does not divide {F.m}")
    conj = [x.frobenius(a * j) for j in range(F.m // a)]
    norm, trace = F.one, F.zero
    for c in conj:
        norm = norm * c
        trace = trace + c
    if norm.frobenius(a) != norm or trace.frobenius(a) != trace:
        raise AssertionError("norm or trace left the subfield")
    return norm, trace


def subfield_elements(F: _GF, a: int) -> list[FqElement]:
    q = F.p ** a
    return [y for y in F.elements() if F.pow(y, q) == y]


def conjugate_matrix(theta: FqElement) -> list[list[int]]:
    """Coordinates of ``theta, theta^p, ..., theta^(p^(m-1))`` as rows."""
    F = theta.field
    return [list(theta.frobenius(j).coeffs) for j in range(F.m)]


def normal_basis_element(p: int, n: int) -> FqElement:
    """The least element (by number) whose Galois conjugates form an ``F_p``-basis."""
    if p ** n > SMALL_FIELD_LIMIT:
        raise FieldError(f"p^n must be at most {SMALL_FIELD_LIMIT}")
    F = GF(p, n)
    for theta in F.elements():
        if theta.is_zero():
            continue
        if rank_mod_p(conjugate_matrix(theta), p) == n:
            return theta
    raise AssertionError("no normal basis element found")  # excluded by the normal basis theorem


def tensor_decompose(p: int, a: int, b: int) -> list[tuple[int, int]]:
    """Factors of ``F_{p^a} (x)_{F_p} F_{p^b}`` as ``(degree over F_p, multiplicity)``.

    The tensor product is ``F_{p^b}[x] / f`` for the canonical degree-``a``
    modulus ``f``; a distinct-degree factorization of ``f`` over ``F_{p^b}``
    gives one field of degree ``b * k`` per irreducible factor of degree ``k``.
    The result is cross-checked against ``gcd(a, b)`` fields of degree ``lcm(a, b)``.
    """
    if p ** max(a, b) > SMALL_FIELD_LIMIT:
        raise FieldError(f"p^max(a, b) must be at most {SMALL_FIELD_LIMIT}")
    E = GF(p, b)
    f = [E(c) for c in canonical_modulus(p, a)]
    found = [(b * k, count) for k, count in distinct_degree_factorization(E, f)]
    g = gcd(a, b)
    if found != [(a * b // g, g)]:
        raise AssertionError(f"factorization {found} disagrees with gcd/lcm prediction")
    return found


class NormFormSystem:
    """Linear system over ``F_p`` for norm forms ``V^{x G} -> E``.

    ``E = F_{p^n}``, ``G = Z/n`` generated by Frobenius, ``V = E^d``.  A norm
    form is fixed by its values ``c_i in E`` on basis tuples ``i in [d]^n``
    (twisted multilinearity extends them uniquely), giving ``n * d^n``
    unknowns over ``F_p``.  When ``equivariant`` is set the descent
    condition ``g . c_i = c_{i o g}`` is imposed for the generator, i.e.
    ``frob(c_i) = c_j`` with ``j_h = i_{h+1}``.
    """

    def __init__(self, p: int, n: int, d: int, equivariant: bool = True):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if n < 1 or d < 1:
            raise FieldError("n and d must be positive")
        if n * d ** n > NORM_FORM_LIMIT:
            raise FieldError(f"n * d^n must be at most {NORM_FORM_LIMIT}")
        self.p, self.n, self.d = p, n, d
        self.equivariant = equivariant
        self.tuples = list(product(range(d), repeat=n))
        self.unknowns = n * len(self.tuples)
        self.rows = self._constraints() if equivariant else []

    def _constraints(self) -> list[list[int]]:
        p, n = self.p, self.n
        frob = GF(p, n).frobenius_matrix()
        pos = {t: k for k, t in enumerate(self.tuples)}
        rows = []
        for t in self.tuples:
            shifted = tuple(t[(h + 1) % n] for h in range(n))
            src, dst = pos[t] * n, pos[shifted] * n
            for r in range(n):
                row = [0] * self.unknowns
                for col in range(n):
                    row[src + col] = (row[src + col] + frob[r][col]) % p
                row[dst + r] = (row[dst + r] - 1) % p
                rows.append(row)
        return rows

    def solve(self) -> list[list[int]]:
        return nullspace_mod_p(self.rows, self.unknowns, self.p)

    def dimension(self) -> int:
        return self.unknowns - rank_mod_p(self.rows, self.p)


def norm_form_space(p: int, n: int, d: int, equivariant: bool = True) -> tuple[int, list[list[int]]]:
    """Dimension over ``F_p`` and a basis of the space of norm forms."""
    system = NormFormSystem(p, n, d, equivariant)
    basis = system.solve()
    return len(basis), basis
