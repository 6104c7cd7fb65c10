"""Orbital and atomic checks on finite categories, plus builtin examples.

A finite category ``T`` is treated as orbital when, for every cospan
``a -> c <- b``, the presheaf pullback of the representables is a finite
coproduct of representables, and as atomic when every retraction
``r: a -> b`` with a section ``s`` (``r s = id_b``) also has ``s r = id_a``.
For skeletal finite 1-categories these are the usual specializations of the
higher-categorical definitions; equivalence and isomorphism coincide there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional, Sequence

from .category import (CategoryError, FiniteCategory, decompose_into_representables,
                       pullback_presheaf)
from .gset import orbit_category
from .perm import GroupLike, as_subgroup, builtin_group, subgroup_classes


@dataclass
class OrbitalReport:
    orbital: bool
    atomic: bool
    failing_cospan: Optional[tuple[str, str]] = None
    failing_retract: Optional[tuple[str, str]] = None
    cospans_checked: int = 0
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.orbital and self.atomic

    def to_json(self) -> dict:
        return {
            "orbital": self.orbital,
            "atomic": self.atomic,
            "failing_cospan": list(self.failing_cospan) if self.failing_cospan else None,
            "failing_retract": list(self.failing_retract) if self.failing_retract else None,
            "cospans_checked": self.cospans_checked,
            "retract_pairs_checked": self.pairs_checked,
        }


def is_orbital(T: FiniteCategory) -> tuple[bool, Optional[tuple[int, int]], int]:
    """Scan every cospan of representables; returns ``(ok, witness (f, g), count)``.

    Unordered pairs suffice: swapping the legs gives an isomorphic pullback.
    """
    checked = 0
    for c in range(len(T)):
        into = T.hom_to(c)
        for i, f in enumerate(into):
            for g in into[i:]:
                checked += 1
                if decompose_into_representables(pullback_presheaf(T, f, g)) is None:
                    return False, (f, g), checked
    return True, None, checked


def is_atomic(T: FiniteCategory) -> tuple[bool, Optional[tuple[int, int]], int]:
    """Look for ``r: a -> b``, ``s: b -> a`` with ``r s = id`` but ``s r != id``."""
    checked = 0
    for a in range(len(T)):
        for b in range(len(T)):
            for r in T.hom(a, b):
                for s in T.hom(b, a):
                    checked += 1
                    if T.compose(r, s) == T.identity(b) and T.compose(s, r) != T.identity(a):
                        return False, (r, s), checked
    return True, None, checked


def check_category(T: FiniteCategory) -> OrbitalReport:
    orb, cospan, n1 = is_orbital(T)
    atom, retract, n2 = is_atomic(T)
    return OrbitalReport(
        orbital=orb, atomic=atom,
        failing_cospan=tuple(T.labels[m] for m in cospan) if cospan else None,
        failing_retract=tuple(T.labels[m] for m in retract) if retract else None,
        cospans_checked=n1, pairs_checked=n2)


# -- builtin categories -----------------------------------------------------------

def surj_leq(n: int, include_empty: bool = False) -> FiniteCategory:
    """Finite sets ``{0..k-1}`` with ``k <= n`` and surjections between them.

    The empty set is left out unless ``include_empty``; when present it only
    has its identity, since no surjection connects it to a nonempty set.
    """
    if n < 1:
        raise ValueError("n must be positive")
    sizes = ([0] if include_empty else []) + list(range(1, n + 1))
    homs = {}
    for a, k in enumerate(sizes):
        for b, m in enumerate(sizes):
            if m > k or (m == 0) != (k == 0):
                continue
            homs[(a, b)] = [f for f in product(range(m), repeat=k) if len(set(f)) == m]
    return FiniteCategory.build(
        [str(k) for k in sizes], homs,
        identity=lambda a: tuple(range(sizes[a])),
        compose=lambda g, f, a, b, c: tuple(g[x] for x in f),
        label=lambda f, a, b: f"{sizes[a]}->{sizes[b]}:" + "".join(map(str, f)))


def groupoid(groups: Sequence[GroupLike], names: Optional[Sequence[str]] = None) -> FiniteCategory:
    """Disjoint union of one-object categories ``BG_i`` (a finite groupoid, skeletal form)."""
    groups = [as_subgroup(G) for G in groups]
    names = list(names) if names else [f"B{i}" for i in range(len(groups))]
    homs = {(i, i): list(G.elements) for i, G in enumerate(groups)}
    return FiniteCategory.build(
        names, homs,
        identity=lambda a: groups[a].identity,
        compose=lambda g, f, a, b, c: g * f,
        label=lambda g, a, b: f"{names[a]}:{g}")


def check_family(G: GroupLike, family: Sequence[int]) -> Optional[object]:
    """Return a witness subgroup violating convexity of the family, or None.

    The family (a set of subgroup-class indices) must contain the class of
    every ``H'`` with ``K <= H' <= L`` whenever ``K`` and ``L`` lie in it.
    """
    table = subgroup_classes(G)
    fam = set(family)
    members = [S for S in table.all_subgroups if table.index(S) in fam]
    for K in members:
        for L in members:
            if not K <= L:
                continue
            for H in table.subgroups_of(L):
                if K <= H and table.index(H) not in fam:
                    return H
    return None


def family_category(G: GroupLike, family: Sequence[int]) -> FiniteCategory:
    """The full subcategory of the orbit category on a convex family of subgroup classes."""
    family = sorted(set(family))
    table = subgroup_classes(G)
    if any(not 0 <= i < len(table) for i in family):
        raise CategoryError("family refers to an unknown subgroup class")
    bad = check_family(G, family)
    if bad is not None:
        raise CategoryError("family is not closed under intermediate subgroups",
                            {"subgroup": [list(g.images) for g in bad.generators],
                             "class": table.index(bad)})
    O = orbit_category(G)
    keep = {a: k for k, a in enumerate(family)}
    morphisms, new_id = [], {}
    for f in range(O.morphism_count):
        if O.src[f] in keep and O.tgt[f] in keep:
            new_id[f] = len(morphisms)
            morphisms.append((O.labels[f], keep[O.src[f]], keep[O.tgt[f]]))
    comp = {(new_id[g], new_id[f]): new_id[h] for (g, f), h in O.comp.items()
            if f in new_id and g in new_id}
    return FiniteCategory([O.objects[a] for a in family], morphisms,
                          [new_id[O.identity(a)] for a in family], comp)


def idempotent_splitting() -> FiniteCategory:
    """Objects ``a, b`` with ``r: a -> b``, ``s: b -> a``, ``r s = id_b`` and ``e = s r != id_a``."""
    morphisms = [("id_a", 0, 0), ("e", 0, 0), ("id_b", 1, 1), ("r", 0, 1), ("s", 1, 0)]
    ida, e, idb, r, s = range(5)
    comp = {
        (ida, ida): ida, (ida, e): e, (e, ida): e, (e, e): e,
        (idb, idb): idb, (r, ida): r, (r, e): r, (idb, r): r,
        (ida, s): s, (e, s): s, (s, idb): s,
        (r, s): idb, (s, r): e,
    }
    return FiniteCategory(["a", "b"], morphisms, [ida, idb], comp)


def _subgroup_classes_by_name(G, tokens: Sequence[str]) -> list[int]:
    """Resolve family entries given as class indices or as subgroup orders like ``o3``."""
    table = subgroup_classes(G)
    out = []
    for tok in tokens:
        tok = tok.strip()
        if tok.startswith("o"):
            order = int(tok[1:])
            out.extend(i for i, R in enumerate(table) if R.order == order)
        else:
            out.append(int(tok))
    return out


def build_builtin(kind: str, params: str = "") -> FiniteCategory:
    """Builtin categories by name.

    ``orbit_category:G``, ``family:G:i,j,...`` (class indices, or ``oN`` for
    all classes of order ``N``), ``surj_leq:n`` (``surj_leq:n:empty`` keeps the
    empty set), ``groupoid:G1,G2,...`` and ``idempotent``.
    """
    parts = params.split(":") if params else []
    if kind == "orbit_category":
        return orbit_category(builtin_group(parts[0]))
    if kind == "family":
        G = builtin_group(parts[0])
        return family_category(G, _subgroup_classes_by_name(G, parts[1].split(",")))
    if kind == "surj_leq":
        return surj_leq(int(parts[0]), include_empty=len(parts) > 1 and parts[1] == "empty")
    if kind == "groupoid":
        names = parts[0].split(",")
        return groupoid([builtin_group(n) for n in names], [f"B{n}" for n in names])
    if kind == "idempotent":
        return idempotent_splitting()
    raise ValueError(f"unknown builtin category {kind!r}")


def parse_builtin(text: str) -> FiniteCategory:
    kind, _, params = text.partition(":")
    return build_builtin(kind, params)
