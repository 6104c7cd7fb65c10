"""Finite G-sets, equivariant maps and the orbit category."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional, Sequence

from .category import FiniteCategory
from .perm import (GroupLike, Permutation, PermGroup, Subgroup, as_subgroup, group_from_json,
                   left_transversal, right_transversal, subgroup_classes)


class GSetError(ValueError):
    pass


class GSet:
    """A finite set ``{0..size-1}`` with an action of ``group``.

    ``action[g][x]`` is ``g . x``.  The homomorphism property is verified at
    construction: ``action(e) = id`` and ``action(s g) = action(s) action(g)``
    for every generator ``s`` and every element ``g``, which by induction on
    word length covers all pairs.
    """

    __slots__ = ("group", "size", "action")

    def __init__(self, group: GroupLike, size: int, action: Mapping[Permutation, Sequence[int]],
                 check: bool = True):
        self.group = as_subgroup(group)
        self.size = size
        self.action = {g: tuple(action[g]) for g in self.group.elements}
        if check:
            self._check()

    def _check(self) -> None:
        rng = list(range(self.size))
        for g, img in self.action.items():
            if len(img) != self.size or sorted(img) != rng:
                raise GSetError(f"action of {g} is not a permutation of {self.size} points")
        if list(self.action[self.group.identity]) != rng:
            raise GSetError("identity does not act trivially")
        for s in self.group.generators:
            a_s = self.action[s]
            for g, a_g in self.action.items():
                if self.action[s * g] != tuple(a_s[y] for y in a_g):
                    raise GSetError(f"action is not a homomorphism at ({s}, {g})")

    @classmethod
    def from_generators(cls, group: GroupLike, size: int,
                        generator_action: Sequence[Sequence[int]]) -> "GSet":
        """Extend an action given on ``group.generators`` to every element."""
        H = as_subgroup(group)
        gens = H.generators
        if len(generator_action) != len(gens):
            raise GSetError(f"expected {len(gens)} generator actions, got {len(generator_action)}")
        gen_act = [tuple(a) for a in generator_action]
        action = {H.identity: tuple(range(size))}
        frontier = [H.identity]
        while frontier:
            new = []
            for g in frontier:
                for s, a_s in zip(gens, gen_act):
                    sg = s * g
                    img = tuple(a_s[y] for y in action[g])
                    if sg not in action:
                        action[sg] = img
                        new.append(sg)
                    elif action[sg] != img:
                        raise GSetError("generator action does not respect the group relations")
            frontier = new
        return cls(H, size, action)

    @classmethod
    def trivial(cls, group: GroupLike, size: int = 1) -> "GSet":
        H = as_subgroup(group)
        return cls(H, size, {g: tuple(range(size)) for g in H.elements}, check=False)

    def act(self, g: Permutation, x: int) -> int:
        return self.action[g][x]

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, GSet):
            return NotImplemented
        return self.group == other.group and self.size == other.size and self.action == other.action

    def __hash__(self):
        return hash((self.group, self.size))

    def __repr__(self):
        return f"<GSet of size {self.size} over a group of order {self.group.order}>"

    def to_json(self) -> dict:
        gens = self.group.generators
        return {"size": self.size, "generator_action": [list(self.action[s]) for s in gens]}

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group.parent, (g for g in self.group.elements if self.action[g][x] == x))

    def orbit(self, x: int) -> list[int]:
        return sorted({a[x] for a in self.action.values()})


def gset_from_json(data: dict, group: Optional[PermGroup] = None) -> GSet:
    """Parse ``{"group": ..., "size": n, "generator_action": [[...], ...]}``."""
    try:
        G = group if group is not None else group_from_json(data["group"])
        return GSet.from_generators(G, int(data["size"]), data["generator_action"])
    except (KeyError, TypeError) as exc:
        raise GSetError(f"malformed G-set description: {exc!r}") from exc


class GMap:
    """An equivariant map ``source -> target`` given by its table of images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: GSet, target: GSet, images: Sequence[int], check: bool = True):
        self.source, self.target, self.images = source, target, tuple(images)
        if check:
            if source.group != target.group:
                raise GSetError("source and target are sets over different groups")
            if len(self.images) != source.size or any(not 0 <= y < target.size for y in self.images):
                raise GSetError("image table has the wrong shape")
            for g in source.group.generators:
                a, b = source.action[g], target.action[g]
                for x in range(source.size):
                    if self.images[a[x]] != b[self.images[x]]:
                        raise GSetError(f"map is not equivariant at g={g}, x={x}")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __matmul__(self, other: "GMap") -> "GMap":
        return GMap(other.source, self.target, [self.images[y] for y in other.images], check=False)

    @classmethod
    def identity(cls, X: GSet) -> "GMap":
        return cls(X, X, range(X.size), check=False)

    def __eq__(self, other):
        if not isinstance(other, GMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GMap({list(self.images)})"


@dataclass(frozen=True)
class Orbit:
    points: tuple[int, ...]
    base: int
    stabilizer: Subgroup
    class_index: int


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[Orbit, ...]

    def class_counts(self) -> Counter:
        return Counter(o.class_index for o in self.orbits)

    def __len__(self):
        return len(self.orbits)


def orbits_decompose(X: GSet) -> OrbitDecomposition:
    """Orbits ordered by least point; the base point of each is its least point."""
    table = subgroup_classes(X.group)
    seen: set[int] = set()
    orbits = []
    for x in range(X.size):
        if x in seen:
            continue
        pts = X.orbit(x)
        seen.update(pts)
        stab = X.stabilizer(x)
        orbits.append(Orbit(tuple(pts), x, stab, table.index(stab)))
    return OrbitDecomposition(tuple(orbits))


def fixed_points(X: GSet, H: Subgroup) -> list[int]:
    gens = H.generators
    return [x for x in range(X.size) if all(X.action[h][x] == x for h in gens)]


def restrict(X: GSet, H: Subgroup) -> GSet:
    if not H <= X.group:
        raise GSetError("can only restrict to a subgroup of the acting group")
    return GSet(H, X.size, {h: X.action[h] for h in H.elements}, check=False)


def point(G: GroupLike) -> GSet:
    return GSet.trivial(G, 1)


def coset_gset(G: GroupLike, H: Subgroup) -> GSet:
    """The left cosets ``G/H`` (ordered by least element) with left translation."""
    G = as_subgroup(G)
    if not H <= G:
        raise GSetError("H must be a subgroup of G")
    reps = left_transversal(H, G)
    where = {}
    for i, t in enumerate(reps):
        for h in H.elements:
            where[t * h] = i
    action = {g: tuple(where[g * t] for t in reps) for g in G.elements}
    return GSet(G, len(reps), action)


def coset_index(G: GroupLike, H: Subgroup) -> tuple[list[Permutation], dict]:
    """Left transversal of ``H`` in ``G`` and the map element -> coset number."""
    reps = left_transversal(H, as_subgroup(G))
    where = {t * h: i for i, t in enumerate(reps) for h in H.elements}
    return reps, where


def disjoint_union(*sets: GSet) -> GSet:
    if not sets:
        raise GSetError("need at least one G-set")
    G = sets[0].group
    if any(X.group != G for X in sets):
        raise GSetError("all summands must be over the same group")
    offsets, total = [], 0
    for X in sets:
        offsets.append(total)
        total += X.size
    action = {g: tuple(o + y for X, o in zip(sets, offsets) for y in X.action[g]) for g in G.elements}
    return GSet(G, total, action, check=False)


def pullback(f: GMap, g: GMap) -> tuple[GSet, GMap, GMap]:
    """Fibre product ``{(x, y) : f(x) = g(y)}`` with the diagonal action, pairs in lex order."""
    if f.target != g.target:
        raise GSetError("maps must share a target")
    X, Y = f.source, g.source
    pairs = [(x, y) for x in range(X.size) for y in range(Y.size) if f.images[x] == g.images[y]]
    where = {p: i for i, p in enumerate(pairs)}
    action = {h: tuple(where[(X.action[h][x], Y.action[h][y])] for x, y in pairs)
              for h in X.group.elements}
    P = GSet(X.group, len(pairs), action)
    return P, GMap(P, X, [x for x, _ in pairs]), GMap(P, Y, [y for _, y in pairs])


def to_point(X: GSet) -> GMap:
    return GMap(X, point(X.group), [0] * X.size, check=False)


def gset_product(X: GSet, Y: GSet) -> GSet:
    Z = point(X.group)
    return pullback(GMap(X, Z, [0] * X.size), GMap(Y, Z, [0] * Y.size))[0]


def induce(X: GSet, K: GroupLike) -> GSet:
    """``K x_H X`` for an ``H``-set ``X`` with ``H <= K`` (indexed coproduct over ``K/H``)."""
    H, K = X.group, as_subgroup(K)
    if not H <= K:
        raise GSetError("the acting group of X must be a subgroup of K")
    reps = left_transversal(H, K)
    where = {t * h: (i, h) for i, t in enumerate(reps) for h in H.elements}
    n = X.size
    action = {}
    for k in K.elements:
        img = []
        for t in reps:
            i, h = where[k * t]
            ah = X.action[h]
            img.extend(i * n + ah[x] for x in range(n))
        action[k] = tuple(img)
    return GSet(K, len(reps) * n, action)


def coinduce(X: GSet, K: GroupLike) -> GSet:
    """``Map_H(K, X)`` for an ``H``-set ``X`` (indexed product over ``K/H``).

    A point is the tuple of values ``f(s_j)`` on the right transversal
    ``s_j`` of ``H`` in ``K``; ``f(h s_j) = h f(s_j)`` fixes the rest and
    ``(k f)(k') = f(k' k)``.  Points are numbered in lexicographic order.
    """
    H, K = X.group, as_subgroup(K)
    if not H <= K:
        raise GSetError("the acting group of X must be a subgroup of K")
    reps = right_transversal(H, K)
    where = {h * s: (h, j) for j, s in enumerate(reps) for h in H.elements}
    points = list(product(range(X.size), repeat=len(reps)))
    index = {p: i for i, p in enumerate(points)}
    action = {}
    for k in K.elements:
        moves = [where[s * k] for s in reps]
        action[k] = tuple(index[tuple(X.action[h][f[j]] for h, j in moves)] for f in points)
    return GSet(K, len(points), action)


def are_isomorphic(X: GSet, Y: GSet) -> bool:
    """Finite G-sets are isomorphic iff their stabilizer-class multisets agree."""
    if X.group != Y.group:
        raise GSetError("G-sets over different groups")
    if X.size != Y.size:
        return False
    return orbits_decompose(X).class_counts() == orbits_decompose(Y).class_counts()


def count_gmaps(X: GSet, Y: GSet) -> int:
    """Number of equivariant maps ``X -> Y``: each orbit rep may go to any point fixed by its stabilizer."""
    total = 1
    for orb in orbits_decompose(X).orbits:
        total *= len(fixed_points(Y, orb.stabilizer))
    return total


def gmaps(X: GSet, Y: GSet) -> Iterator[GMap]:
    """All equivariant maps ``X -> Y``."""
    orbits = orbits_decompose(X).orbits
    choices = [fixed_points(Y, o.stabilizer) for o in orbits]
    for pick in product(*choices):
        images = [0] * X.size
        for orb, y in zip(orbits, pick):
            for g, a in X.action.items():
                images[a[orb.base]] = Y.action[g][y]
        yield GMap(X, Y, images, check=False)


def orbit_category(G: GroupLike) -> FiniteCategory:
    """Transitive G-sets ``G/H`` (one per subgroup class) and all equivariant maps.

    A map ``G/H -> G/K`` is determined by the image ``gK`` of ``eH``, which
    must satisfy ``g^-1 H g <= K``; it is labelled by the least element of ``gK``.
    """
    G = as_subgroup(G)
    table = subgroup_classes(G)
    reps = table.representatives
    cosets = [coset_index(G, K) for K in reps]
    homs = {}
    for a, H in enumerate(reps):
        for b, K in enumerate(reps):
            transversal, _ = cosets[b]
            homs[(a, b)] = [g for g in transversal if H.conjugate(g.inverse()) <= K]

    def compose(g2, g1, a, b, c):
        transversal, where = cosets[c]
        return transversal[where[g1 * g2]]

    names = [f"G/{table.label(i)}" for i in range(len(reps))]
    return FiniteCategory.build(names, homs, identity=lambda a: G.identity, compose=compose,
                                label=lambda g, a, b: f"{names[a]}->{names[b]}:{g}")
