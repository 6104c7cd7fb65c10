"""Explicit finite categories and presheaves on them.

Morphisms are numbered ``0..M-1``; composition is a dictionary keyed by
``(g, f)`` meaning ``g o f`` (apply ``f`` first).  Every law is checked
exhaustively when a category or presheaf is constructed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Sequence


class CategoryError(ValueError):
    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}


class FiniteCategory:
    """A finite category given by explicit hom-sets and a composition table."""

    def __init__(self, objects: Sequence[str], morphisms: Sequence[tuple[str, int, int]],
                 identities: Sequence[int], comp: dict[tuple[int, int], int]):
        self.objects = list(objects)
        self.labels = [m[0] for m in morphisms]
        self.src = [m[1] for m in morphisms]
        self.tgt = [m[2] for m in morphisms]
        self.identities = list(identities)
        self.comp = dict(comp)
        n = len(self.objects)
        self._hom: dict[tuple[int, int], list[int]] = {(a, b): [] for a in range(n) for b in range(n)}
        for f, (a, b) in enumerate(zip(self.src, self.tgt)):
            if not (0 <= a < n and 0 <= b < n):
                raise CategoryError(f"morphism {self.labels[f]!r} has an unknown endpoint")
            self._hom[(a, b)].append(f)
        self._validate()

    # -- construction helpers --------------------------------------------------

    @classmethod
    def build(cls, objects: Sequence[str], homs: dict[tuple[int, int], Sequence[Hashable]],
              identity: Callable[[int], Hashable],
              compose: Callable[[Hashable, Hashable, int, int, int], Hashable],
              label: Callable[[Hashable, int, int], str] = None) -> "FiniteCategory":
        """Build from hom-sets of arbitrary hashable values and a composition function.

        ``compose(g, f, a, b, c)`` receives ``f: a -> b`` and ``g: b -> c``.
        """
        label = label or (lambda v, a, b: f"{objects[a]}->{objects[b]}:{v}")
        morphisms, ids = [], {}
        n = len(objects)
        for a in range(n):
            for b in range(n):
                for v in homs.get((a, b), ()):
                    ids[(a, b, v)] = len(morphisms)
                    morphisms.append((label(v, a, b), a, b))
        identities = []
        for a in range(n):
            key = (a, a, identity(a))
            if key not in ids:
                raise CategoryError(f"identity of {objects[a]!r} missing from its hom-set")
            identities.append(ids[key])
        comp = {}
        for a in range(n):
            for b in range(n):
                for f in homs.get((a, b), ()):
                    for c in range(n):
                        for g in homs.get((b, c), ()):
                            h = compose(g, f, a, b, c)
                            if (a, c, h) not in ids:
                                raise CategoryError(
                                    f"composite of {g} and {f} is not in Hom({objects[a]}, {objects[c]})")
                            comp[(ids[(b, c, g)], ids[(a, b, f)])] = ids[(a, c, h)]
        return cls(objects, morphisms, identities, comp)

    @classmethod
    def from_json(cls, data: dict) -> "FiniteCategory":
        """Parse ``{"objects", "hom": {"a|b": [...]}, "id": {...}, "comp": {"g∘f": "h"}}``."""
        try:
            objects = [str(o) for o in data["objects"]]
            index = {o: i for i, o in enumerate(objects)}
            morphisms, by_name = [], {}
            for key, names in data["hom"].items():
                a, b = key.split("|")
                for name in names:
                    if name in by_name:
                        raise CategoryError(f"duplicate morphism name {name!r}")
                    by_name[name] = len(morphisms)
                    morphisms.append((name, index[a], index[b]))
            identities = [by_name[data["id"][o]] for o in objects]
            comp = {}
            for key, h in data["comp"].items():
                g, f = key.split("∘")
                comp[(by_name[g], by_name[f])] = by_name[h]
        except (KeyError, ValueError, AttributeError, TypeError) as exc:
            if isinstance(exc, CategoryError):
                raise
            raise CategoryError(f"malformed category description: {exc!r}") from exc
        return cls(objects, morphisms, identities, comp)

    def to_json(self) -> dict:
        hom = {}
        for (a, b), fs in self._hom.items():
            if fs:
                hom[f"{self.objects[a]}|{self.objects[b]}"] = [self.labels[f] for f in fs]
        return {
            "objects": list(self.objects),
            "hom": hom,
            "id": {o: self.labels[self.identities[i]] for i, o in enumerate(self.objects)},
            "comp": {f"{self.labels[g]}∘{self.labels[f]}": self.labels[h]
                     for (g, f), h in sorted(self.comp.items())},
        }

    # -- laws ----------------------------------------------------------------

    def _validate(self) -> None:
        n = len(self.objects)
        if len(self.identities) != n:
            raise CategoryError("need exactly one identity per object")
        for a, i in enumerate(self.identities):
            if self.src[i] != a or self.tgt[i] != a:
                raise CategoryError(f"identity of {self.objects[a]!r} is not an endomorphism",
                                    {"object": self.objects[a]})
        for (g, f), h in self.comp.items():
            if self.tgt[f] != self.src[g]:
                raise CategoryError("composition table contains a non-composable pair",
                                    {"pair": [self.labels[g], self.labels[f]]})
            if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                raise CategoryError("composite has wrong endpoints",
                                    {"pair": [self.labels[g], self.labels[f]], "result": self.labels[h]})
        for f in range(len(self.labels)):
            for g in self.hom_from(self.tgt[f]):
                if (g, f) not in self.comp:
                    raise CategoryError("composition table is incomplete",
                                        {"pair": [self.labels[g], self.labels[f]]})
        for f in range(len(self.labels)):
            a, b = self.src[f], self.tgt[f]
            if self.comp[(f, self.identities[a])] != f or self.comp[(self.identities[b], f)] != f:
                raise CategoryError(f"identity law fails for {self.labels[f]!r}",
                                    {"morphism": self.labels[f]})
        comp = self.comp
        for f in range(len(self.labels)):
            for g in self.hom_from(self.tgt[f]):
                gf = comp[(g, f)]
                for h in self.hom_from(self.tgt[g]):
                    if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                        raise CategoryError(
                            "associativity fails",
                            {"triple": [self.labels[h], self.labels[g], self.labels[f]]})

    # -- access ----------------------------------------------------------------

    def __len__(self):
        return len(self.objects)

    @property
    def morphism_count(self) -> int:
        return len(self.labels)

    def index(self, obj: str) -> int:
        return self.objects.index(obj)

    def hom(self, a: int, b: int) -> list[int]:
        return self._hom[(a, b)]

    def hom_from(self, a: int) -> list[int]:
        return [f for b in range(len(self.objects)) for f in self._hom[(a, b)]]

    def hom_to(self, b: int) -> list[int]:
        return [f for a in range(len(self.objects)) for f in self._hom[(a, b)]]

    def compose(self, g: int, f: int) -> int:
        return self.comp[(g, f)]

    def identity(self, a: int) -> int:
        return self.identities[a]

    def __repr__(self):
        return f"<FiniteCategory with {len(self.objects)} objects, {len(self.labels)} morphisms>"


def validate_category(data) -> FiniteCategory:
    """Validate raw tables (a JSON-style dict) and return the category."""
    if isinstance(data, FiniteCategory):
        data._validate()
        return data
    return FiniteCategory.from_json(data)


class Presheaf:
    """A set-valued contravariant functor on a finite category.

    ``restriction[h]`` for ``h: d -> e`` is a tuple sending the index of an
    element of ``P(e)`` to the index of its restriction in ``P(d)``.
    """

    def __init__(self, base: FiniteCategory, values: Sequence[Sequence[Hashable]],
                 restriction: dict[int, tuple[int, ...]], check: bool = True):
        self.base = base
        self.values = [list(v) for v in values]
        self.restriction = restriction
        if check:
            self._validate()

    def _validate(self) -> None:
        T = self.base
        for a in range(len(T)):
            r = self.restriction[T.identity(a)]
            if list(r) != list(range(len(self.values[a]))):
                raise CategoryError("presheaf does not preserve identities", {"object": T.objects[a]})
        for f in range(T.morphism_count):
            for g in T.hom_from(T.tgt[f]):
                rgf = self.restriction[T.compose(g, f)]
                rf, rg = self.restriction[f], self.restriction[g]
                if any(rgf[x] != rf[rg[x]] for x in range(len(rgf))):
                    raise CategoryError("presheaf is not functorial",
                                        {"pair": [T.labels[g], T.labels[f]]})

    def size(self, a: int) -> int:
        return len(self.values[a])

    def sizes(self) -> list[int]:
        return [len(v) for v in self.values]


def representable(T: FiniteCategory, a: int) -> Presheaf:
    values = [T.hom(d, a) for d in range(len(T))]
    pos = [{u: i for i, u in enumerate(v)} for v in values]
    restriction = {h: tuple(pos[T.src[h]][T.compose(u, h)] for u in values[T.tgt[h]])
                   for h in range(T.morphism_count)}
    return Presheaf(T, values, restriction, check=False)


def pullback_presheaf(T: FiniteCategory, f: int, g: int) -> Presheaf:
    """The presheaf ``d -> {(u, v) : f u = g v}`` for a cospan ``a -f-> c <-g- b``."""
    if T.tgt[f] != T.tgt[g]:
        raise CategoryError("f and g must share a target")
    a, b = T.src[f], T.src[g]
    values = []
    for d in range(len(T)):
        by_composite: dict[int, list[int]] = {}
        for v in T.hom(d, b):
            by_composite.setdefault(T.compose(g, v), []).append(v)
        values.append([(u, v) for u in T.hom(d, a) for v in by_composite.get(T.compose(f, u), ())])
    pos = [{p: i for i, p in enumerate(v)} for v in values]
    restriction = {}
    for h in range(T.morphism_count):
        d = T.src[h]
        restriction[h] = tuple(pos[d][(T.compose(u, h), T.compose(v, h))] for u, v in values[T.tgt[h]])
    return Presheaf(T, values, restriction, check=False)


@dataclass(frozen=True)
class RepresentableDecomposition:
    objects: tuple[int, ...]           # underlying object of each terminal element
    terminal_elements: tuple[tuple[int, int], ...]

    def names(self, T: FiniteCategory) -> list[str]:
        return [T.objects[a] for a in self.objects]


def decompose_into_representables(P: Presheaf) -> Optional[RepresentableDecomposition]:
    """Write ``P`` as a coproduct of representables, or return None.

    Works in the category of elements: ``P`` is such a coproduct exactly when
    each connected component has a terminal element.  A terminal element
    ``(a, x)`` is one receiving exactly one morphism from every element of its
    component, namely ``h: d -> a`` with ``P(h)(x) = y``.
    """
    T = P.base
    elements = [(d, i) for d in range(len(T)) for i in range(P.size(d))]
    index = {e: k for k, e in enumerate(elements)}
    parent = list(range(len(elements)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    hits: list[Counter] = []
    for k, (a, x) in enumerate(elements):
        c: Counter = Counter()
        for h in T.hom_to(a):
            c[index[(T.src[h], P.restriction[h][x])]] += 1
        hits.append(c)
        for j in c:
            ra, rb = find(k), find(j)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    components: dict[int, list[int]] = {}
    for k in range(len(elements)):
        components.setdefault(find(k), []).append(k)

    terminals = []
    for root in sorted(components):
        members = components[root]
        term = next((k for k in members
                     if len(hits[k]) == len(members) and all(v == 1 for v in hits[k].values())),
                     None)
        if term is None:
            return None
        terminals.append(elements[term])

    objs = tuple(a for a, _ in terminals)
    for d in range(len(T)):
        # a terminal element exhibits its component as a representable, so the counts must match
        expected = sum(len(T.hom(d, a)) for a in objs)
        if expected != P.size(d):
            raise AssertionError(f"counting identity fails at {T.objects[d]}")
    return RepresentableDecomposition(objs, tuple(terminals))
