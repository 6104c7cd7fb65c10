"""Finite permutation groups.

Groups are enumerated completely; every element is kept in a canonical
(lexicographic by image tuple) order so that all derived data is
deterministic.  Products compose right to left: ``(g * h)(i) == g(h(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Optional, Sequence, Union

DEFAULT_ORDER_BOUND = 2000
MAX_DEGREE = 32


class GroupSizeError(ValueError):
    """Raised when a closure exceeds the configured order bound."""


@total_ordering
class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        if len(images) > MAX_DEGREE:
            raise ValueError(f"degree {len(images)} exceeds {MAX_DEGREE}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self.images
        return Permutation._raw(tuple(a[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n, p = 1, self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class PermGroup:
    """A finite group given by generating permutations, fully enumerated."""

    def __init__(self, degree: int, generators: Sequence[Permutation] = (),
                 bound: int = DEFAULT_ORDER_BOUND, name: Optional[str] = None):
        gens = []
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.bound = bound
        self.name = name
        self.elements = tuple(sorted(_closure(Permutation.identity(degree), gens, bound)))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, self.elements, gens=self.generators)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), gens=())

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.whole

    def subgroup(self, generators: Iterable[Permutation]) -> "Subgroup":
        return Subgroup.generated(self, generators)

    def __repr__(self):
        label = self.name or f"PermGroup(degree={self.degree})"
        return f"<{label} of order {self.order}>"

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g.images) for g in self.generators]}


def _closure(identity: Permutation, gens: Sequence[Permutation], bound: int) -> set:
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for s in gens:
                y = s * x
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > bound:
                        raise GroupSizeError(f"group order exceeds bound {bound}")
        frontier = new
    return elements


def close_group(degree: int, generators: Sequence, bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    return PermGroup(degree, [g if isinstance(g, Permutation) else Permutation(g) for g in generators],
                     bound=bound)


class Subgroup:
    """A subgroup of a :class:`PermGroup`, stored as its sorted element list."""

    __slots__ = ("parent", "elements", "_set", "_hash", "_gens", "__dict__")

    def __init__(self, parent: PermGroup, elements: Iterable[Permutation], gens=None):
        self.parent = parent
        self._set = frozenset(elements)
        self.elements = tuple(sorted(self._set))
        self._hash = hash(self._set)
        self._gens = None if gens is None else tuple(gens)

    @classmethod
    def generated(cls, parent: PermGroup, gens: Iterable[Permutation]) -> "Subgroup":
        gens = tuple(gens)
        return cls(parent, _closure(parent.identity, gens, parent.bound), gens=gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @property
    def generators(self) -> tuple:
        if self._gens is None:
            self._gens = _small_generating_set(self)
        return self._gens

    @property
    def key(self) -> tuple:
        """Canonical sort key: order first, then element list."""
        return (len(self.elements), self.elements)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self._set == other._set

    def __hash__(self):
        return self._hash

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self._set < other._set

    def issubgroup(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def conjugate(self, g: Permutation) -> "Subgroup":
        """Return ``g H g^-1``."""
        gi = g.inverse()
        return Subgroup(self.parent, (g * h * gi for h in self.elements))

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self._set & other._set)

    def join(self, *more: Permutation) -> "Subgroup":
        return Subgroup.generated(self.parent, self.generators + tuple(more))

    def __repr__(self):
        gens = ", ".join(map(repr, self.generators)) or "()"
        return f"<Subgroup of order {self.order} generated by {gens}>"


def _small_generating_set(H: Subgroup) -> tuple:
    gens: list[Permutation] = []
    current = {H.identity}
    for g in H.elements:
        if g not in current:
            gens.append(g)
            current = _closure(H.identity, gens, H.parent.bound)
            if len(current) == H.order:
                break
    return tuple(gens)


GroupLike = Union[PermGroup, Subgroup]


def as_subgroup(G: GroupLike) -> Subgroup:
    return G.whole if isinstance(G, PermGroup) else G


# -- cosets, conjugacy -------------------------------------------------------

def left_transversal(H: Subgroup, K: GroupLike) -> list[Permutation]:
    """Least element of each left coset ``kH`` of ``H`` in ``K``."""
    K = as_subgroup(K)
    seen: set = set()
    reps = []
    for k in K.elements:
        if k in seen:
            continue
        reps.append(k)
        seen.update(k * h for h in H.elements)
    return reps


def right_transversal(H: Subgroup, K: GroupLike) -> list[Permutation]:
    """Least element of each right coset ``Hk`` of ``H`` in ``K``."""
    K = as_subgroup(K)
    seen: set = set()
    reps = []
    for k in K.elements:
        if k in seen:
            continue
        reps.append(k)
        seen.update(h * k for h in H.elements)
    return reps


def is_conjugate(H1: Subgroup, H2: Subgroup, ambient: Optional[GroupLike] = None) -> Optional[Permutation]:
    """Least ``g`` in the ambient group with ``g H1 g^-1 == H2``, or None."""
    if H1.order != H2.order:
        return None
    ambient = as_subgroup(ambient) if ambient is not None else H1.parent.whole
    target = H2._set
    for g in ambient.elements:
        gi = g.inverse()
        if all(g * h * gi in target for h in H1.generators):
            return g
    return None


def normalizer(H: Subgroup, ambient: Optional[GroupLike] = None) -> Subgroup:
    ambient = as_subgroup(ambient) if ambient is not None else H.parent.whole
    elems = []
    for g in ambient.elements:
        gi = g.inverse()
        if all(g * h * gi in H._set for h in H.generators):
            elems.append(g)
    return Subgroup(H.parent, elems)


def normalizer_and_weyl(H: Subgroup, ambient: Optional[GroupLike] = None):
    """Return ``(N, reps)``: the normalizer and a left transversal of ``H`` in it."""
    N = normalizer(H, ambient)
    return N, left_transversal(H, N)


# -- subgroup classes ----------------------------------------------------------

def _prime_power_order(g: Permutation) -> bool:
    n = g.order()
    if n == 1:
        return False
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


class SubgroupClassTable:
    """Conjugacy classes of subgroups of an ambient group.

    Representatives are the least member of each class and are sorted by
    ``(order, element list)``.  Every subgroup of the ambient group is
    mapped to ``(class index, g)`` where ``g`` is the least element with
    ``g S g^-1`` equal to the representative.
    """

    def __init__(self, ambient: GroupLike):
        self.ambient = as_subgroup(ambient)
        self.classes: list[list[Subgroup]] = []
        self._lookup: dict[Subgroup, tuple[int, Permutation]] = {}
        keyed = []
        for R in _class_representatives(self.ambient):
            # canonical representative = least member of the class
            least = min({R.conjugate(g) for g in self.ambient.elements}, key=lambda S: S.key)
            keyed.append((least.key, least))
        keyed.sort(key=lambda t: t[0])
        self.representatives: list[Subgroup] = []
        for i, (_, R) in enumerate(keyed):
            self.representatives.append(R)
            conj = {}
            for g in self.ambient.elements:
                S = R.conjugate(g.inverse())
                if S not in conj:
                    conj[S] = g
                    self._lookup[S] = (i, g)
            self.classes.append(sorted(conj, key=lambda S: S.key))

    def __len__(self):
        return len(self.representatives)

    def __getitem__(self, i: int) -> Subgroup:
        return self.representatives[i]

    def __iter__(self):
        return iter(self.representatives)

    def lookup(self, S: Subgroup) -> tuple[int, Permutation]:
        try:
            return self._lookup[S]
        except KeyError:
            raise ValueError(f"{S!r} is not a subgroup of the ambient group") from None

    def index(self, S: Subgroup) -> int:
        return self.lookup(S)[0]

    def conjugator(self, S: Subgroup) -> Permutation:
        return self.lookup(S)[1]

    @cached_property
    def all_subgroups(self) -> list[Subgroup]:
        return sorted(self._lookup, key=lambda S: S.key)

    def subgroups_of(self, H: Subgroup) -> list[Subgroup]:
        return [S for S in self.all_subgroups if S <= H]

    def maximal_subgroups(self, H: Subgroup) -> list[Subgroup]:
        below = [S for S in self.subgroups_of(H) if S != H]
        return [S for S in below if not any(S < T for T in below)]

    def subconjugate(self, i: int, j: int) -> bool:
        """Whether class ``i`` is subconjugate to class ``j``."""
        Rj = self.representatives[j]
        return any(S <= Rj for S in self.classes[i])

    def label(self, i: int) -> str:
        return f"H{i}[{self.representatives[i].order}]"


def _class_representatives(ambient: Subgroup) -> list[Subgroup]:
    # cyclic extension: adjoin prime-power-order elements to known representatives
    candidates = [g for g in ambient.elements if _prime_power_order(g)]
    trivial = Subgroup(ambient.parent, (ambient.identity,), gens=())
    reps = [trivial]
    by_order: dict[int, list[Subgroup]] = {1: [trivial]}
    queue = [trivial]
    while queue:
        U = queue.pop(0)
        for h in candidates:
            if h in U:
                continue
            V = U.join(h)
            if any(is_conjugate(V, R, ambient) is not None for R in by_order.get(V.order, [])):
                continue
            by_order.setdefault(V.order, []).append(V)
            reps.append(V)
            queue.append(V)
    return reps


_CLASS_CACHE: dict = {}


def subgroup_classes(G: GroupLike) -> SubgroupClassTable:
    ambient = as_subgroup(G)
    key = (id(ambient.parent), ambient)
    table = _CLASS_CACHE.get(key)
    if table is None or table.ambient.parent is not ambient.parent:
        table = SubgroupClassTable(ambient)
        _CLASS_CACHE[key] = table
    return table


# -- double cosets -------------------------------------------------------------

@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """The double cosets ``L x K`` inside an ambient subgroup."""

    left: Subgroup
    right: Subgroup
    ambient: Subgroup
    reps: tuple
    intersections: tuple  # (L & x K x^-1, x^-1 L x & K) per representative

    def __len__(self):
        return len(self.reps)

    def sizes(self) -> list[int]:
        L, K = self.left.order, self.right.order
        return [L * K // a.order for a, _ in self.intersections]

    def cosets(self) -> list[frozenset]:
        return [frozenset(l * x * k for l in self.left for k in self.right) for x in self.reps]


def double_cosets(L: Subgroup, K: Subgroup, ambient: Optional[GroupLike] = None) -> DoubleCosetDecomposition:
    """Decompose the ambient group into double cosets ``L x K``.

    Each representative is the least element of its double coset.
    """
    H = as_subgroup(ambient) if ambient is not None else L.parent.whole
    if not (L <= H and K <= H):
        raise ValueError("L and K must lie in the ambient subgroup")
    seen: set = set()
    reps, inters = [], []
    for x in H.elements:
        if x in seen:
            continue
        reps.append(x)
        seen.update(l * x * k for l in L.elements for k in K.elements)
        xi = x.inverse()
        inters.append((L.intersection(K.conjugate(x)), L.conjugate(xi).intersection(K)))
    return DoubleCosetDecomposition(L, K, H, tuple(reps), tuple(inters))


# -- builtin groups --------------------------------------------------------------

def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    gens = [Permutation([(i + 1) % n for i in range(n)])] if n > 1 else []
    return PermGroup(n, gens, name=f"C{n}")


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order ``2n`` acting on an ``n``-gon."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    r = Permutation([(i + 1) % n for i in range(n)])
    s = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [r, s], name=f"D{n}")


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n > 1:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    if n > 2:
        gens.append(Permutation.from_cycles(n, [list(range(n))]))
    return PermGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    gens = [Permutation.from_cycles(n, [[0, 1, i]]) for i in range(2, n)]
    return PermGroup(n, gens, name=f"A{n}")


def quaternion_group() -> PermGroup:
    # points 0..7 stand for 1, i, j, k, -1, -i, -j, -k; act by left multiplication
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    for u in "ijk":
        table[(u, u)] = (-1, "1")
    table.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    units = "1ijk"

    def index(sign, u):
        return units.index(u) + (0 if sign > 0 else 4)

    def left_mult(a):
        images = []
        for pt in range(8):
            sign, u = (1 if pt < 4 else -1), units[pt % 4]
            s2, w = table[(a, u)]
            images.append(index(sign * s2, w))
        return Permutation(images)

    return PermGroup(8, [left_mult("i"), left_mult("j")], name="Q8")


def klein_four() -> PermGroup:
    return PermGroup(4, [Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])], name="C2xC2")


def builtin_group(name: str) -> PermGroup:
    """Look up a named group: ``S3``, ``C<n>``, ``D<n>``, ``Q8``, ``A4``, ``S4``, ``C2xC2``."""
    name = name.strip()
    fixed = {"Q8": quaternion_group, "C2xC2": klein_four, "V4": klein_four,
             "A4": lambda: alternating_group(4), "S4": lambda: symmetric_group(4),
             "S3": lambda: symmetric_group(3), "e": lambda: cyclic_group(1)}
    if name in fixed:
        return fixed[name]()
    m = re.fullmatch(r"([CDSA])(\d+)", name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"C": cyclic_group, "D": dihedral_group,
                "S": symmetric_group, "A": alternating_group}[kind](n)
    raise ValueError(f"unknown builtin group {name!r}")


def group_from_json(obj) -> PermGroup:
    if isinstance(obj, str):
        return builtin_group(obj)
    if not isinstance(obj, dict) or "degree" not in obj:
        raise ValueError("group must be a builtin name or {'degree':..., 'generators': [...]}")
    degree = int(obj["degree"])
    gens = [Permutation(g) for g in obj.get("generators", [])]
    return PermGroup(degree, gens, bound=int(obj.get("bound", DEFAULT_ORDER_BOUND)))


STANDARD_GROUPS = ("C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8", "C12", "A4", "S4")
