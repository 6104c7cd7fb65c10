"""Mackey functors on a finite group and an exhaustive axiom checker.

Storage
-------
A level ``M(R_i)`` is kept only for each subgroup-class representative
``R_i``.  Every other subgroup ``H`` is read in the coordinates of its
representative through the canonical conjugator ``g_H`` of the class table
(``g_H H g_H^-1 = R_i``).  Restriction and transfer are stored once per
pair (representative ``R_j``, ``R_j``-class of maximal subgroups ``M``),
together with a witness ``w`` with ``w M w^-1 = R_i``: the stored matrices
are ``c_w o res`` and ``tr o c_w^-1``.  Conjugation on a level reduces to
the Weyl group ``N(R_i)/R_i``, stored by generators.  All other structure
maps are composites of these, evaluated on demand.

The double coset formula checked here is

    res^H_L tr^H_K = sum over x in L\\H/K of tr^L_{L & xKx^-1} c_x res^K_{x^-1Lx & K}

with the sum over double cosets inside ``H``.  Summing over ``L\\G/K``
instead is not a valid identity when ``H != G`` (the two index sets differ
in size), so the checker uses ``L\\H/K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .abelian import AbelianGroupError, AbHom, FgAbGroup, block_diagonal, integer_kernel, left_inverse, matmul
from .perm import (GroupLike, Permutation, PermGroup, Subgroup, as_subgroup, double_cosets,
                   group_from_json, is_conjugate, left_transversal, normalizer, subgroup_classes)


class MackeyError(ValueError):
    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}


@dataclass(frozen=True)
class Cover:
    upper: int
    lower: int
    witness: Permutation  # w with w M w^-1 = R_lower, where M <= R_upper is maximal
    res: AbHom            # M(R_upper) -> M(R_lower)
    tr: AbHom             # M(R_lower) -> M(R_upper)


@dataclass(frozen=True)
class WeylGenerator:
    level: int
    element: Permutation
    action: AbHom


def subgroup_json(H: Subgroup) -> list[list[int]]:
    return [list(g.images) for g in H.generators]


def weyl_generators(R: Subgroup, ambient: Subgroup) -> list[Permutation]:
    """Greedy generators of ``N(R)`` modulo ``R``, scanning elements in canonical order."""
    N = normalizer(R, ambient)
    gens: list[Permutation] = []
    current = set(R.elements)
    for n in N.elements:
        if n not in current:
            gens.append(n)
            current = set(Subgroup.generated(R.parent, R.generators + tuple(gens)).elements)
            if len(current) == N.order:
                break
    return gens


class MackeyFunctor:
    """Levels, cover maps and Weyl actions; see the module docstring."""

    def __init__(self, group: GroupLike, levels: Sequence[FgAbGroup], covers: Sequence[Cover],
                 weyl: Sequence[WeylGenerator], name: str = ""):
        self.group = as_subgroup(group)
        self.table = subgroup_classes(self.group)
        self.levels = list(levels)
        self.covers = list(covers)
        self.weyl = list(weyl)
        self.name = name
        self._res_cache: dict = {}
        self._tr_cache: dict = {}
        self._validate()

    # -- structure ---------------------------------------------------------------

    def _validate(self) -> None:
        T = self.table
        n = len(T)
        if len(self.levels) != n:
            raise MackeyError(f"expected {n} levels, got {len(self.levels)}")
        self._stored: dict[int, list[tuple[Subgroup, Cover]]] = {j: [] for j in range(n)}
        for c in self.covers:
            if not (0 <= c.upper < n and 0 <= c.lower < n):
                raise MackeyError("cover refers to an unknown class")
            M = T[c.lower].conjugate(c.witness.inverse())
            Rj = T[c.upper]
            if M not in T.maximal_subgroups(Rj):
                raise MackeyError("cover witness does not give a maximal subgroup of the upper class",
                                  {"upper": c.upper, "lower": c.lower, "witness": list(c.witness.images)})
            for hom, src, dst, kind in ((c.res, c.upper, c.lower, "res"), (c.tr, c.lower, c.upper, "tr")):
                if hom.source != self.levels[src] or hom.target != self.levels[dst]:
                    raise MackeyError(f"{kind} map has the wrong source or target",
                                      {"upper": c.upper, "lower": c.lower})
                try:
                    hom.check_well_defined()
                except AbelianGroupError as exc:
                    raise MackeyError(f"{kind} map is not well defined: {exc}",
                                      {"upper": c.upper, "lower": c.lower}) from exc
            if any(is_conjugate(M0, M, Rj) is not None for M0, _ in self._stored[c.upper]):
                raise MackeyError("two covers for the same maximal subgroup class",
                                  {"upper": c.upper, "lower": c.lower})
            self._stored[c.upper].append((M, c))
        for j, Rj in enumerate(T):
            for M in T.maximal_subgroups(Rj):
                if not any(is_conjugate(M0, M, Rj) is not None for M0, _ in self._stored[j]):
                    raise MackeyError("missing cover for a maximal subgroup",
                                      {"upper": j, "lower": T.index(M), "subgroup": subgroup_json(M)})
        self._build_weyl_tables()

    def _coset_key(self, i: int, n: Permutation) -> Permutation:
        return min(n * r for r in self.table[i].elements)

    def _build_weyl_tables(self) -> None:
        T = self.table
        gens: dict[int, list[WeylGenerator]] = {i: [] for i in range(len(T))}
        for w in self.weyl:
            R = T[w.level]
            if R.conjugate(w.element) != R:
                raise MackeyError("Weyl generator does not normalize its subgroup",
                                  {"level": w.level, "element": list(w.element.images)})
            if w.action.source != self.levels[w.level] or w.action.target != self.levels[w.level]:
                raise MackeyError("Weyl action has the wrong shape", {"level": w.level})
            gens[w.level].append(w)
        self._weyl_table: list[dict[Permutation, AbHom]] = []
        for i, R in enumerate(T):
            ident = AbHom.identity(self.levels[i])
            table = {self._coset_key(i, R.identity): ident}
            frontier = [(R.identity, ident)]
            while frontier:
                new = []
                for n, A in frontier:
                    for w in gens[i]:
                        m = w.element * n
                        act = w.action @ A
                        key = self._coset_key(i, m)
                        if key not in table:
                            table[key] = act
                            new.append((m, act))
                        elif table[key] != act:
                            raise MackeyError("Weyl generators do not define a group action",
                                              {"level": i, "element": list(m.images)})
                frontier = new
            N = normalizer(R, self.group)
            if len(table) != N.order // R.order:
                raise MackeyError("Weyl generators do not generate the Weyl group", {"level": i})
            self._weyl_table.append(table)

    # -- evaluation ------------------------------------------------------------

    def level_of(self, H: Subgroup) -> FgAbGroup:
        return self.levels[self.table.index(H)]

    def weyl_action(self, i: int, n: Permutation) -> AbHom:
        """Action of ``n`` in ``N(R_i)`` on the level ``M(R_i)``."""
        try:
            return self._weyl_table[i][self._coset_key(i, n)]
        except KeyError:
            raise MackeyError("element does not normalize the representative",
                              {"level": i, "element": list(n.images)}) from None

    def eval_conj(self, x: Permutation, H: Subgroup) -> AbHom:
        """``c_x: M(H) -> M(x H x^-1)``."""
        i, gH = self.table.lookup(H)
        _, gK = self.table.lookup(H.conjugate(x))
        return self.weyl_action(i, gK * x * gH.inverse())

    def _find_stored(self, j: int, M: Subgroup) -> tuple[Subgroup, Cover, Permutation]:
        Rj = self.table[j]
        for M0, c in self._stored[j]:
            k = is_conjugate(M0, M, Rj)
            if k is not None:
                return M0, c, k
        raise MackeyError("no stored cover for this subgroup", {"upper": j})  # excluded by _validate

    def _res_cover(self, j: int, M: Subgroup) -> AbHom:
        M0, c, k = self._find_stored(j, M)
        g0 = self.table.conjugator(M0)
        base = self.weyl_action(c.lower, g0 * c.witness.inverse()) @ c.res
        return self.eval_conj(k, M0) @ base

    def _tr_cover(self, j: int, M: Subgroup) -> AbHom:
        M0, c, k = self._find_stored(j, M)
        g0 = self.table.conjugator(M0)
        base = c.tr @ self.weyl_action(c.lower, c.witness * g0.inverse())
        return base @ self.eval_conj(k.inverse(), M)

    def _check_pair(self, H: Subgroup, K: Subgroup) -> None:
        if not H <= K:
            raise MackeyError("subgroup is not contained in the larger one",
                              {"H": subgroup_json(H), "K": subgroup_json(K)})

    def eval_res(self, H: Subgroup, K: Subgroup) -> AbHom:
        """``res^K_H: M(K) -> M(H)`` for ``H <= K``."""
        key = (H, K)
        hit = self._res_cache.get(key)
        if hit is not None:
            return hit
        self._check_pair(H, K)
        if H == K:
            out = AbHom.identity(self.level_of(H))
        else:
            j, g = self.table.lookup(K)
            Rj = self.table[j]
            H1 = H.conjugate(g)
            M = next(S for S in self.table.maximal_subgroups(Rj) if H1 <= S)
            inner = self.eval_res(H1, M) @ self._res_cover(j, M)
            out = self.eval_conj(g.inverse(), H1) @ inner
        self._res_cache[key] = out
        return out

    def eval_tr(self, H: Subgroup, K: Subgroup) -> AbHom:
        """``tr^K_H: M(H) -> M(K)`` for ``H <= K``."""
        key = (H, K)
        hit = self._tr_cache.get(key)
        if hit is not None:
            return hit
        self._check_pair(H, K)
        if H == K:
            out = AbHom.identity(self.level_of(H))
        else:
            j, g = self.table.lookup(K)
            Rj = self.table[j]
            H1 = H.conjugate(g)
            M = next(S for S in self.table.maximal_subgroups(Rj) if H1 <= S)
            inner = self._tr_cover(j, M) @ self.eval_tr(H1, M)
            out = inner @ self.eval_conj(g, H)
        self._tr_cache[key] = out
        return out

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        parent = self.group.parent
        group = parent.name if parent.name and _is_builtin(parent) else parent.to_json()
        maps = []
        for c in self.covers:
            maps.append({"kind": "res", "from": c.upper, "to": c.lower,
                         "witness": list(c.witness.images), "matrix": c.res.matrix})
            maps.append({"kind": "tr", "from": c.lower, "to": c.upper,
                         "witness": list(c.witness.images), "matrix": c.tr.matrix})
        for w in self.weyl:
            maps.append({"kind": "weyl", "from": w.level, "to": w.level,
                         "element": list(w.element.images), "matrix": w.action.matrix})
        return {"schema": 1, "name": self.name, "group": group,
                "levels": [{"class": i, "factors": list(L.factors)} for i, L in enumerate(self.levels)],
                "maps": maps}

    @classmethod
    def from_json(cls, data: dict) -> "MackeyFunctor":
        try:
            G = group_from_json(data["group"])
            levels_raw = sorted(data["levels"], key=lambda d: d["class"])
            levels = [FgAbGroup(d["factors"]) for d in levels_raw]
            if [d["class"] for d in levels_raw] != list(range(len(levels))):
                raise MackeyError("levels must be numbered 0..n-1")
            pending: dict = {}
            weyl = []
            for m in data["maps"]:
                kind = m["kind"]
                if kind == "weyl":
                    i = int(m["from"])
                    weyl.append(WeylGenerator(i, Permutation(m["element"]),
                                              AbHom(levels[i], levels[i], m["matrix"], check=False)))
                elif kind in ("res", "tr"):
                    upper, lower = (m["from"], m["to"]) if kind == "res" else (m["to"], m["from"])
                    w = Permutation(m["witness"])
                    src, dst = (upper, lower) if kind == "res" else (lower, upper)
                    hom = AbHom(levels[src], levels[dst], m["matrix"], check=False)
                    pending.setdefault((int(upper), int(lower), w), {})[kind] = hom
                else:
                    raise MackeyError(f"unknown map kind {kind!r}")
            covers = []
            for (upper, lower, w), pair in pending.items():
                if set(pair) != {"res", "tr"}:
                    raise MackeyError("each cover needs both a res and a tr map",
                                      {"upper": upper, "lower": lower})
                covers.append(Cover(upper, lower, w, pair["res"], pair["tr"]))
        except (KeyError, TypeError, IndexError, AbelianGroupError, ValueError) as exc:
            if isinstance(exc, MackeyError):
                raise
            raise MackeyError(f"malformed Mackey functor: {exc}") from exc
        return cls(G, levels, covers, weyl, name=data.get("name", ""))


def _is_builtin(G: PermGroup) -> bool:
    from .perm import builtin_group
    try:
        return builtin_group(G.name).elements == G.elements
    except ValueError:
        return False


# -- constructors ----------------------------------------------------------------------

def _maximal_cover_reps(table, j: int) -> list[Subgroup]:
    """One maximal subgroup of ``R_j`` per ``R_j``-conjugacy class, least first."""
    Rj = table[j]
    reps: list[Subgroup] = []
    for M in table.maximal_subgroups(Rj):
        if not any(is_conjugate(M0, M, Rj) is not None for M0 in reps):
            reps.append(M)
    return reps


def burnside_mackey(G: GroupLike) -> MackeyFunctor:
    """``H -> A(H)`` with restriction of H-sets, induction as transfer, conjugation by transport."""
    G = as_subgroup(G)
    T = subgroup_classes(G)
    local = [subgroup_classes(R) for R in T]
    levels = [FgAbGroup.free(len(t)) for t in local]
    covers = []
    for j, Rj in enumerate(T):
        for M in _maximal_cover_reps(T, j):
            i, w = T.lookup(M)
            res = [[0] * len(local[j]) for _ in range(len(local[i]))]
            for b, U in enumerate(local[j]):
                for inter, _ in double_cosets(M, U, Rj).intersections:
                    res[local[i].index(inter.conjugate(w))][b] += 1
            tr = [[0] * len(local[i]) for _ in range(len(local[j]))]
            wi = w.inverse()
            for a, U in enumerate(local[i]):
                tr[local[j].index(U.conjugate(wi))][a] = 1
            covers.append(Cover(j, i, w, AbHom(levels[j], levels[i], res),
                                AbHom(levels[i], levels[j], tr)))
    weyl = []
    for i, R in enumerate(T):
        for n in weyl_generators(R, G):
            mat = [[0] * len(local[i]) for _ in range(len(local[i]))]
            for a, U in enumerate(local[i]):
                mat[local[i].index(U.conjugate(n))][a] = 1
            weyl.append(WeylGenerator(i, n, AbHom(levels[i], levels[i], mat)))
    return MackeyFunctor(G, levels, covers, weyl, name="burnside")


def _representation_table(G: Subgroup, generator_matrices: Sequence[Sequence[Sequence[int]]]) -> dict:
    gens = G.generators
    if len(generator_matrices) != len(gens):
        raise MackeyError(f"expected {len(gens)} generator matrices, got {len(generator_matrices)}")
    k = len(generator_matrices[0]) if generator_matrices else 0
    mats = [[list(map(int, r)) for r in m] for m in generator_matrices]
    if any(len(m) != k or any(len(r) != k for r in m) for m in mats):
        raise MackeyError("generator matrices must all be square of the same size")
    ident = [[int(i == j) for j in range(k)] for i in range(k)]
    rho = {G.identity: ident}
    frontier = [G.identity]
    while frontier:
        new = []
        for g in frontier:
            for s, m in zip(gens, mats):
                sg = s * g
                img = matmul(m, rho[g])
                if sg not in rho:
                    rho[sg] = img
                    new.append(sg)
                elif rho[sg] != img:
                    raise MackeyError("matrices do not define an action of the group",
                                      {"element": list(sg.images)})
        frontier = new
    return rho


def fixed_point_mackey(G: GroupLike, generator_matrices: Sequence[Sequence[Sequence[int]]],
                       k: Optional[int] = None) -> MackeyFunctor:
    """``H -> (Z^k)^H`` for an integral representation given on ``G.generators``.

    Levels are the fixed sublattices (saturated bases from Smith normal
    form); restriction is inclusion and transfer sums over coset representatives.
    """
    G = as_subgroup(G)
    if k is None:
        k = len(generator_matrices[0]) if generator_matrices else 0
    if not G.generators:
        generator_matrices = []
    rho = _representation_table(G, generator_matrices) if G.generators else \
        {G.identity: [[int(i == j) for j in range(k)] for i in range(k)]}
    T = subgroup_classes(G)

    def col(B, c):
        return [row[c] for row in B]

    bases, lefts = [], []
    for R in T:
        A = []
        for h in R.generators:
            A.extend([rho[h][i][j] - int(i == j) for j in range(k)] for i in range(k))
        B = integer_kernel(A, k)
        bases.append(B)
        lefts.append(left_inverse(B))
    levels = [FgAbGroup.free(len(B[0]) if B and B[0] else 0) for B in bases]

    def coords(i, v):
        c = [sum(a * x for a, x in zip(row, v)) for row in lefts[i]]
        back = [sum(bases[i][r][s] * c[s] for s in range(len(c))) for r in range(k)]
        if back != list(v):
            raise AssertionError("vector is not in the fixed lattice")
        return c

    def apply(m, v):
        return [sum(a * x for a, x in zip(row, v)) for row in m]

    def hom_from_columns(src, dst, columns):
        return AbHom(levels[src], levels[dst],
                     [[columns[c][r] for c in range(levels[src].rank)] for r in range(levels[dst].rank)])

    covers = []
    for j, Rj in enumerate(T):
        for M in _maximal_cover_reps(T, j):
            i, w = T.lookup(M)
            res_cols = [coords(i, apply(rho[w], col(bases[j], b))) for b in range(levels[j].rank)]
            reps = left_transversal(M, Rj)
            tr_cols = []
            for a in range(levels[i].rank):
                u = apply(rho[w.inverse()], col(bases[i], a))
                s = [0] * k
                for t in reps:
                    s = [x + y for x, y in zip(s, apply(rho[t], u))]
                tr_cols.append(coords(j, s))
            covers.append(Cover(j, i, w, hom_from_columns(j, i, res_cols),
                                hom_from_columns(i, j, tr_cols)))
    weyl = []
    for i, R in enumerate(T):
        for n in weyl_generators(R, G):
            cols = [coords(i, apply(rho[n], col(bases[i], a))) for a in range(levels[i].rank)]
            weyl.append(WeylGenerator(i, n, hom_from_columns(i, i, cols)))
    return MackeyFunctor(G, levels, covers, weyl, name="fixed_points")


def permutation_matrices(G: GroupLike) -> list[list[list[int]]]:
    """The permutation representation of ``G`` on its points, per generator."""
    G = as_subgroup(G)
    n = G.parent.degree
    return [[[int(g(c) == r) for c in range(n)] for r in range(n)] for g in G.generators]


def direct_sum(functors: Sequence[MackeyFunctor], name: str = "") -> MackeyFunctor:
    """Levelwise direct sum; all summands must use the same covers and Weyl generators."""
    first = functors[0]
    for F in functors[1:]:
        if F.group != first.group:
            raise MackeyError("summands live over different groups")
    levels = [FgAbGroup(sum((F.levels[i].factors for F in functors), ()))
              for i in range(len(first.levels))]
    covers = []
    for idx, c in enumerate(first.covers):
        parts = [F.covers[idx] for F in functors]
        if any((p.upper, p.lower, p.witness) != (c.upper, c.lower, c.witness) for p in parts):
            raise MackeyError("summands use different covers")
        covers.append(Cover(c.upper, c.lower, c.witness,
                            block_diagonal([p.res for p in parts]), block_diagonal([p.tr for p in parts])))
    weyl = []
    for idx, w in enumerate(first.weyl):
        parts = [F.weyl[idx] for F in functors]
        if any((p.level, p.element) != (w.level, w.element) for p in parts):
            raise MackeyError("summands use different Weyl generators")
        weyl.append(WeylGenerator(w.level, w.element, block_diagonal([p.action for p in parts])))
    return MackeyFunctor(first.group, levels, covers, weyl, name=name)


def tamper(M: MackeyFunctor, kind: str, cover_index: int, row: int, col: int, delta: int = 1) -> MackeyFunctor:
    """Copy of ``M`` with one entry of a stored res or tr matrix shifted by ``delta``."""
    covers = list(M.covers)
    c = covers[cover_index]
    hom = getattr(c, kind)
    mat = [list(r) for r in hom.matrix]
    mat[row][col] += delta
    new = AbHom(hom.source, hom.target, mat)
    covers[cover_index] = Cover(c.upper, c.lower, c.witness,
                                new if kind == "res" else c.res, new if kind == "tr" else c.tr)
    return MackeyFunctor(M.group, M.levels, covers, M.weyl, name=M.name + "+tampered")


# -- checking ------------------------------------------------------------------------------

@dataclass
class CheckEntry:
    kind: str
    passed: bool
    witness: Optional[dict] = None


@dataclass
class MackeyReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def counts(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for e in self.entries:
            c = out.setdefault(e.kind, [0, 0])
            c[0 if e.passed else 1] += 1
        return out

    def record(self, kind: str, ok: bool, witness_fn) -> None:
        self.entries.append(CheckEntry(kind, ok, None if ok else witness_fn()))

    def to_json(self, max_failures: int = 20) -> dict:
        return {
            "passed": self.passed,
            "checks": {k: {"passed": p, "failed": f} for k, (p, f) in sorted(self.counts().items())},
            "failures": [{"kind": e.kind, "witness": e.witness} for e in self.failures()[:max_failures]],
        }


def _hom_json(h: AbHom) -> dict:
    return {"source": list(h.source.factors), "target": list(h.target.factors), "matrix": h.matrix}


def check_mackey(M: MackeyFunctor, checks: Sequence[str] = ("transitivity", "conjugation",
                                                              "compatibility", "double_coset")) -> MackeyReport:
    """Verify the Mackey axioms exhaustively over all subgroups of every representative."""
    report = MackeyReport()
    T = M.table
    G = M.group
    sj = subgroup_json

    if "transitivity" in checks:
        for L in T:
            for K in T.subgroups_of(L):
                for H in T.subgroups_of(K):
                    lhs, rhs = M.eval_res(H, L), M.eval_res(H, K) @ M.eval_res(K, L)
                    report.record("res_transitivity", lhs == rhs, lambda: {
                        "H": sj(H), "K": sj(K), "L": sj(L), "lhs": _hom_json(lhs), "rhs": _hom_json(rhs)})
                    lhs, rhs = M.eval_tr(H, L), M.eval_tr(K, L) @ M.eval_tr(H, K)
                    report.record("tr_transitivity", lhs == rhs, lambda: {
                        "H": sj(H), "K": sj(K), "L": sj(L), "lhs": _hom_json(lhs), "rhs": _hom_json(rhs)})

    if "conjugation" in checks:
        for H in T.all_subgroups:
            for h in H.generators:
                c = M.eval_conj(h, H)
                report.record("conj_inner_trivial", c.is_identity(), lambda: {
                    "H": sj(H), "g": list(h.images), "matrix": c.matrix})
        for R in T:
            for g in G.elements:
                gR = R.conjugate(g)
                cg = M.eval_conj(g, R)
                for h in G.elements:
                    lhs = M.eval_conj(g * h, R.conjugate(h.inverse()))
                    rhs = cg @ M.eval_conj(h, R.conjugate(h.inverse()))
                    report.record("conj_functorial", lhs == rhs, lambda: {
                        "H": sj(R.conjugate(h.inverse())), "g": list(g.images), "h": list(h.images),
                        "lhs": _hom_json(lhs), "rhs": _hom_json(rhs)})

    if "compatibility" in checks:
        for K in T:
            for H in T.subgroups_of(K):
                for g in G.elements:
                    gH, gK = H.conjugate(g), K.conjugate(g)
                    lhs = M.eval_conj(g, H) @ M.eval_res(H, K)
                    rhs = M.eval_res(gH, gK) @ M.eval_conj(g, K)
                    report.record("conj_res", lhs == rhs, lambda: {
                        "H": sj(H), "K": sj(K), "g": list(g.images),
                        "lhs": _hom_json(lhs), "rhs": _hom_json(rhs)})
                    lhs = M.eval_tr(gH, gK) @ M.eval_conj(g, H)
                    rhs = M.eval_conj(g, K) @ M.eval_tr(H, K)
                    report.record("conj_tr", lhs == rhs, lambda: {
                        "H": sj(H), "K": sj(K), "g": list(g.images),
                        "lhs": _hom_json(lhs), "rhs": _hom_json(rhs)})

    if "double_coset" in checks:
        for H in T:
            subs = T.subgroups_of(H)
            for K in subs:
                for L in subs:
                    lhs = M.eval_res(L, H) @ M.eval_tr(K, H)
                    dc = double_cosets(L, K, H)
                    total = AbHom.zero(M.level_of(K), M.level_of(L))
                    for x, (left, right) in zip(dc.reps, dc.intersections):
                        total = total + (M.eval_tr(left, L) @ M.eval_conj(x, right) @ M.eval_res(right, K))
                    report.record("double_coset", lhs == total, lambda: {
                        "H": sj(H), "K": sj(K), "L": sj(L),
                        "double_coset_reps": [list(x.images) for x in dc.reps],
                        "lhs": _hom_json(lhs), "rhs": _hom_json(total)})
    return report


# -- Green structure on the Burnside functor ------------------------------------------------

def green_check(G: GroupLike) -> MackeyReport:
    """Frobenius reciprocity and multiplicativity of restriction for the Burnside functor.

    For ``H <= K`` with ``K`` a representative, and basis elements ``x`` of
    ``A(H)`` and ``y`` of ``A(K)``: ``tr(x . res y) == tr(x) . y``,
    ``res(y y') == res(y) res(y')`` and ``res(1) == 1``.
    """
    from .burnside import structure_constants

    G = as_subgroup(G)
    M = burnside_mackey(G)
    T = M.table
    consts = [structure_constants(R) for R in T]
    report = MackeyReport()

    def mult(i, u, v):
        c = consts[i]
        n = len(u)
        return tuple(sum(u[a] * v[b] * c[a][b][k] for a in range(n) for b in range(n)) for k in range(n))

    def unit(i):
        n = M.levels[i].rank
        return tuple(int(k == n - 1) for k in range(n))

    for j, K in enumerate(T):
        nK = M.levels[j].rank
        for H in T.subgroups_of(K):
            i = T.index(H)
            nH = M.levels[i].rank
            res, tr = M.eval_res(H, K), M.eval_tr(H, K)
            report.record("res_unit", res.apply(unit(j)) == unit(i), lambda: {
                "H": subgroup_json(H), "K": subgroup_json(K)})
            for b in range(nK):
                y = tuple(int(t == b) for t in range(nK))
                ry = res.apply(y)
                for a in range(nH):
                    x = tuple(int(t == a) for t in range(nH))
                    lhs = tr.apply(mult(i, x, ry))
                    rhs = mult(j, tr.apply(x), y)
                    report.record("frobenius", lhs == rhs, lambda: {
                        "H": subgroup_json(H), "K": subgroup_json(K), "x": a, "y": b,
                        "lhs": list(lhs), "rhs": list(rhs)})
                for b2 in range(nK):
                    y2 = tuple(int(t == b2) for t in range(nK))
                    lhs = res.apply(mult(j, y, y2))
                    rhs = mult(i, ry, res.apply(y2))
                    report.record("res_multiplicative", lhs == rhs, lambda: {
                        "H": subgroup_json(H), "K": subgroup_json(K), "y": b, "y2": b2,
                        "lhs": list(lhs), "rhs": list(rhs)})
    return report
