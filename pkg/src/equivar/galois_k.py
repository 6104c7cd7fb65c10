"""K-theory of a finite-field extension as a Mackey functor.

For ``E = F_{q^n}`` over ``k = F_q`` with Galois group ``G = Z/n`` the fixed
field of the subgroup of order ``n/a`` is ``F_{q^a}``.  The groups
``K_0 = Z`` and ``K_{2i-1}(F_{q^a}) = Z/(q^{ai} - 1)`` (``K_{2i} = 0`` for
``i > 0``) are taken as input from Quillen's computation; nothing here
derives them.  What is built and checked is the structure on top:

* F (base change ``F_{q^a} -> F_{q^b}``) is multiplication by
  ``(q^{bi}-1)/(q^{ai}-1)`` on ``K_{2i-1}`` and the identity on ``K_0``;
* V (forgetful) is reduction on ``K_{2i-1}`` and multiplication by ``b/a`` on ``K_0``;
* the q-Frobenius acts by ``q^i`` on ``K_{2i-1}`` and trivially on ``K_0``.

F is the restriction and V the transfer of the Mackey functor on ``G``,
realized as the rotation group of ``n`` points.  In this family the
comparisons with fixed points and coinvariants come out as isomorphisms;
:func:`compare_fixed_points` reports that for the model only.  The
descent E2 page is just the input; convergence questions are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import AbHom, FgAbGroup
from .ffield import FieldError, prime_power
from .mackey import (Cover, MackeyFunctor, MackeyReport, WeylGenerator, _maximal_cover_reps,
                     check_mackey, weyl_generators)
from .perm import Permutation, cyclic_group, left_transversal, subgroup_classes


@dataclass
class GaloisKModel:
    q: int
    n: int
    i_max: int
    functor: MackeyFunctor

    def degree(self, class_index: int) -> int:
        """Degree over ``F_q`` of the fixed field of a subgroup class."""
        return self.n // self.functor.table[class_index].order

    def level(self, a: int) -> FgAbGroup:
        return self.functor.levels[self.class_of_degree(a)]

    def class_of_degree(self, a: int) -> int:
        for j, R in enumerate(self.functor.table):
            if R.order * a == self.n:
                return j
        raise ValueError(f"{a} does not divide {self.n}")

    def k_odd(self, a: int, i: int) -> int:
        """Order of ``K_{2i-1}(F_{q^a})``."""
        return self.q ** (a * i) - 1


def _level(q: int, a: int, i_max: int) -> FgAbGroup:
    return FgAbGroup((0,) + tuple(q ** (a * i) - 1 for i in range(1, i_max + 1)))


def _diag(src: FgAbGroup, dst: FgAbGroup, entries) -> AbHom:
    k = len(entries)
    return AbHom(src, dst, [[entries[r] if r == c else 0 for c in range(k)] for r in range(k)])


def build_model(q: int, n: int, i_max: int) -> GaloisKModel:
    if prime_power(q) is None:
        raise FieldError(f"q = {q} is not a prime power")
    if n < 1 or i_max < 0:
        raise ValueError("need n >= 1 and i_max >= 0")
    G = cyclic_group(n)
    T = subgroup_classes(G)
    deg = [n // R.order for R in T]
    levels = [_level(q, a, i_max) for a in deg]
    covers = []
    for j in range(len(T)):
        a = deg[j]
        for M in _maximal_cover_reps(T, j):
            i, w = T.lookup(M)
            b = deg[i]
            res = _diag(levels[j], levels[i],
                        [1] + [(q ** (b * t) - 1) // (q ** (a * t) - 1) for t in range(1, i_max + 1)])
            tr = _diag(levels[i], levels[j], [b // a] + [1] * i_max)
            covers.append(Cover(j, i, w, res, tr))
    weyl = []
    for i, R in enumerate(T):
        for g in weyl_generators(R, G):
            k = g.images[0]  # g is the k-th power of the rotation x -> x + 1
            weyl.append(WeylGenerator(i, g, _diag(levels[i], levels[i],
                                                  [1] + [pow(q, t * k) for t in range(1, i_max + 1)])))
    functor = MackeyFunctor(G, levels, covers, weyl, name=f"K(F_{q}^{n})")
    return GaloisKModel(q, n, i_max, functor)


def _rotation(n: int, k: int) -> Permutation:
    return Permutation([(x + k) % n for x in range(n)])


def verify_model(model: GaloisKModel) -> MackeyReport:
    """The full Mackey check plus FV = sum of conjugates and VF = index at every pair."""
    M = model.functor
    report = check_mackey(M)
    T = M.table
    q, n = model.q, model.n
    for K in T:
        for H in T.subgroups_of(K):
            fv = M.eval_res(H, K) @ M.eval_tr(H, K)
            total = AbHom.zero(M.level_of(H), M.level_of(H))
            for x in left_transversal(H, K):
                total = total + M.eval_conj(x, H)
            report.record("FV_sum", fv == total, lambda: {
                "H": H.order, "K": K.order, "lhs": fv.matrix, "rhs": total.matrix})
            vf = M.eval_tr(H, K) @ M.eval_res(H, K)
            index = AbHom.scalar(M.level_of(K), K.order // H.order)
            report.record("VF_index", vf == index, lambda: {
                "H": H.order, "K": K.order, "lhs": vf.matrix})
    top, bottom = T[len(T) - 1], T[0]
    fv = M.eval_res(bottom, top) @ M.eval_tr(bottom, top)
    for i in range(1, model.i_max + 1):
        m = q ** (n * i) - 1
        closed = (m // (q ** i - 1)) % m if m else 0
        series = sum(q ** (i * j) for j in range(n)) % m if m else 0
        ok = fv.matrix[i][i] % max(m, 1) == closed % max(m, 1) == series % max(m, 1)
        report.record("FV_closed_form", ok, lambda: {
            "weight": i, "modulus": m, "FV": fv.matrix[i][i], "closed": closed, "series": series})
    return report


# -- fixed points and coinvariants -------------------------------------------------------

def _image_order(c: int, m: int) -> int:
    """Order of the subgroup of ``Z/m`` generated by ``c``."""
    return m // gcd(c, m)


@dataclass(frozen=True)
class FixedPointComparison:
    small: int            # degree a of the smaller field
    big: int              # degree b, with a | b
    modulus: int          # |K_{2i-1}(F_{q^b})|
    fixed_order: int      # subgroup fixed by Gal(F_{q^b}/F_{q^a})
    image_F_order: int
    coinvariants_order: int
    image_V_order: int

    @property
    def F_onto_fixed(self) -> bool:
        # subgroups of a cyclic group are determined by their order
        return self.fixed_order == self.image_F_order

    @property
    def V_from_coinvariants_iso(self) -> bool:
        return self.coinvariants_order == self.image_V_order

    def to_json(self) -> dict:
        return {"small_degree": self.small, "big_degree": self.big, "modulus": self.modulus,
                "fixed_order": self.fixed_order, "image_F_order": self.image_F_order,
                "F_onto_fixed": self.F_onto_fixed, "coinvariants_order": self.coinvariants_order,
                "image_V_order": self.image_V_order,
                "V_from_coinvariants_iso": self.V_from_coinvariants_iso}


def compare_fixed_points(model: GaloisKModel, i: int) -> list[FixedPointComparison]:
    """Image of F against Frobenius-fixed points, image of V against coinvariants, per pair ``a | b``."""
    if not 1 <= i <= model.i_max:
        raise ValueError(f"weight must lie in 1..{model.i_max}")
    q, n = model.q, model.n
    out = []
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    for a in divisors:
        for b in divisors:
            if b % a:
                continue
            m, s = q ** (b * i) - 1, q ** (a * i) - 1
            psi = pow(q, a * i, m) if m > 1 else 0  # generator of Gal(F_{q^b}/F_{q^a})
            out.append(FixedPointComparison(
                small=a, big=b, modulus=m,
                fixed_order=gcd(psi - 1, m),
                image_F_order=_image_order(m // s, m),
                coinvariants_order=gcd(psi - 1, m),
                image_V_order=s))
    return out


# -- descent E2 -----------------------------------------------------------------------------

@dataclass(frozen=True)
class DescentE2:
    """Cohomology of ``G = Z/n`` with coefficients in ``K_{2i-1}(E)``.

    ``even`` and ``odd`` are the Tate groups; ``invariants`` is the ordinary
    ``H^0 = ker(phi - 1)``, which differs from Tate ``H^0`` by the image of N.
    """

    weight: int
    modulus: int
    even: FgAbGroup
    odd: FgAbGroup
    invariants: FgAbGroup

    def to_json(self) -> dict:
        return {"weight": self.weight, "module": f"Z/{self.modulus}",
                "tate_even": self.even.order, "tate_odd": self.odd.order,
                "invariants": self.invariants.order}


def descent_e2(model: GaloisKModel, i: int) -> DescentE2:
    """Tate groups ker(phi-1)/im N and ker N/im(phi-1) on ``Z/(q^{ni}-1)``, phi = x q^i."""
    if not 1 <= i <= model.i_max:
        raise ValueError(f"weight must lie in 1..{model.i_max}")
    q, n = model.q, model.n
    m = q ** (n * i) - 1
    phi1 = (q ** i - 1) % m if m > 1 else 0
    norm = sum(q ** (i * j) for j in range(n)) % m if m > 1 else 0
    ker_phi1, ker_norm = gcd(phi1, m), gcd(norm, m)
    im_norm, im_phi1 = m // ker_norm, m // ker_phi1
    # both images are subgroups of the matching kernels (phi - 1) N = 0 in Z/m
    return DescentE2(i, m, FgAbGroup.cyclic(ker_phi1 // im_norm), FgAbGroup.cyclic(ker_norm // im_phi1),
                     FgAbGroup.cyclic(ker_phi1))
