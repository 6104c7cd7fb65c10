"""Spans of G-sets, the Burnside ring and the table of marks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .gset import (GMap, GSet, coset_gset, disjoint_union, fixed_points, orbits_decompose,
                   pullback)
from .perm import (GroupLike, Subgroup, as_subgroup, double_cosets, normalizer,
                   subgroup_classes)

MAX_SPAN_APEX = 24


class SpanError(TypeError):
    pass


class SpanSizeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Span:
    """``X <- S -> Y``, a morphism ``X -> Y`` of the span category."""

    left_leg: GMap
    right_leg: GMap

    def __post_init__(self):
        if self.left_leg.source is not self.right_leg.source and \
                self.left_leg.source != self.right_leg.source:
            raise SpanError("legs must share their source")

    @property
    def apex(self) -> GSet:
        return self.left_leg.source

    @property
    def source(self) -> GSet:
        return self.left_leg.target

    @property
    def target(self) -> GSet:
        return self.right_leg.target

    @classmethod
    def identity(cls, X: GSet) -> "Span":
        return cls(GMap.identity(X), GMap.identity(X))


def compose_spans(s2: Span, s1: Span) -> Span:
    """``s2 o s1`` for ``s1: X -> Y`` and ``s2: Y -> Z``, by pullback over ``Y``."""
    if s1.target != s2.source:
        raise SpanError("middle objects differ")
    P, p1, p2 = pullback(s1.right_leg, s2.left_leg)
    return Span(s1.left_leg @ p1, s2.right_leg @ p2)


def spans_isomorphic(s1: Span, s2: Span, max_apex: int = MAX_SPAN_APEX) -> bool:
    """Search for an equivariant apex bijection commuting with both legs.

    An equivariant bijection preserves stabilizers, so each orbit of the first
    apex must go to an orbit of the second containing a point with the same
    stabilizer and the same leg values; the search assigns orbits to orbits.
    """
    if s1.source != s2.source or s1.target != s2.target:
        raise SpanError("spans have different outer objects")
    A, B = s1.apex, s2.apex
    if max(A.size, B.size) > max_apex:
        raise SpanSizeError(f"apex larger than {max_apex} points")
    if A.size != B.size:
        return False
    orbs_a = orbits_decompose(A).orbits
    orbs_b = orbits_decompose(B).orbits
    if len(orbs_a) != len(orbs_b):
        return False
    l1, r1, l2, r2 = s1.left_leg.images, s1.right_leg.images, s2.left_leg.images, s2.right_leg.images
    compatible = []
    for oa in orbs_a:
        x = oa.base
        compatible.append([
            j for j, ob in enumerate(orbs_b)
            if len(ob.points) == len(oa.points) and any(
                l2[y] == l1[x] and r2[y] == r1[x] and B.stabilizer(y) == oa.stabilizer
                for y in ob.points)])
    used = [False] * len(orbs_b)

    def assign(i: int) -> bool:
        if i == len(orbs_a):
            return True
        for j in compatible[i]:
            if not used[j]:
                used[j] = True
                if assign(i + 1):
                    return True
                used[j] = False
        return False

    return assign(0)


# -- Burnside ring --------------------------------------------------------------------

@dataclass(frozen=True)
class BurnsideElement:
    """Integer combination of the basis ``[G/H]`` over subgroup classes."""

    group: Subgroup
    coefficients: tuple[int, ...]

    def __post_init__(self):
        n = len(subgroup_classes(self.group))
        if len(self.coefficients) != n:
            raise ValueError(f"expected {n} coefficients, got {len(self.coefficients)}")

    @classmethod
    def make(cls, G: GroupLike, coefficients: Sequence[int]) -> "BurnsideElement":
        return cls(as_subgroup(G), tuple(int(c) for c in coefficients))

    @classmethod
    def basis(cls, G: GroupLike, i: int) -> "BurnsideElement":
        n = len(subgroup_classes(G))
        return cls.make(G, [int(j == i) for j in range(n)])

    @classmethod
    def of_gset(cls, X: GSet) -> "BurnsideElement":
        counts = orbits_decompose(X).class_counts()
        n = len(subgroup_classes(X.group))
        return cls.make(X.group, [counts.get(i, 0) for i in range(n)])

    def __add__(self, other):
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other):
        return burnside_multiply(self, other)

    def to_gset(self) -> GSet:
        if any(c < 0 for c in self.coefficients):
            raise ValueError("only non-negative combinations are G-sets")
        reps = subgroup_classes(self.group).representatives
        parts = [coset_gset(self.group, reps[i]) for i, c in enumerate(self.coefficients) for _ in range(c)]
        return disjoint_union(*parts) if parts else GSet.trivial(self.group, 0)


def structure_constants(G: GroupLike) -> list[list[list[int]]]:
    """``c[i][j][k]``: multiplicity of ``[G/H_k]`` in ``[G/H_i] [G/H_j]``."""
    G = as_subgroup(G)
    table = subgroup_classes(G)
    cache = _STRUCT_CACHE.get(G)
    if cache is not None:
        return cache
    n = len(table)
    reps = table.representatives
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            dc = double_cosets(reps[i], reps[j], G)
            for inter, _ in dc.intersections:
                c[i][j][table.index(inter)] += 1
    _STRUCT_CACHE[G] = c
    return c


_STRUCT_CACHE: dict = {}


def burnside_multiply(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Bilinear extension of ``[G/H][G/K] = sum over H\\G/K of [G/(H & xKx^-1)]``."""
    if a.group != b.group:
        raise ValueError("elements of different Burnside rings")
    c = structure_constants(a.group)
    n = len(a.coefficients)
    out = [0] * n
    for i, x in enumerate(a.coefficients):
        if not x:
            continue
        for j, y in enumerate(b.coefficients):
            if y:
                for k in range(n):
                    out[k] += x * y * c[i][j][k]
    return BurnsideElement(a.group, tuple(out))


def burnside_unit(G: GroupLike) -> BurnsideElement:
    return BurnsideElement.basis(G, len(subgroup_classes(G)) - 1)


@dataclass(frozen=True)
class TableOfMarks:
    """``matrix[i][j] = |(G/H_j)^{H_i}|``; rows are the fixing subgroup.

    With classes sorted by order, entries vanish unless ``H_i`` is
    subconjugate to ``H_j``, so ``matrix`` is upper triangular and its
    transpose (:meth:`by_gsets`, rows indexed by the G-set) is lower triangular.
    """

    group: Subgroup
    matrix: tuple[tuple[int, ...], ...]

    def by_gsets(self) -> list[list[int]]:
        return [list(col) for col in zip(*self.matrix)]

    def marks(self, a: BurnsideElement) -> tuple[int, ...]:
        """Mark homomorphism: ``H_i -> |X^{H_i}|`` extended linearly."""
        return tuple(sum(m * c for m, c in zip(row, a.coefficients)) for row in self.matrix)


def table_of_marks(G: GroupLike) -> TableOfMarks:
    G = as_subgroup(G)
    reps = subgroup_classes(G).representatives
    cosets = [coset_gset(G, K) for K in reps]
    matrix = tuple(tuple(len(fixed_points(X, H)) for X in cosets) for H in reps)
    return TableOfMarks(G, matrix)


def weyl_orders(G: GroupLike) -> list[int]:
    G = as_subgroup(G)
    return [normalizer(H, G).order // H.order for H in subgroup_classes(G).representatives]


# -- random instances for property trials -------------------------------------------------

def random_gset(G: GroupLike, rng: random.Random, max_size: int,
                allowed: Optional[Sequence[Subgroup]] = None, min_size: int = 1) -> GSet:
    """Disjoint union of random transitive G-sets ``G/H`` with ``H`` from ``allowed``.

    At most ``max_size`` points; at least one orbit when ``min_size > 0`` and
    some orbit fits.
    """
    G = as_subgroup(G)
    reps = subgroup_classes(G).representatives if allowed is None else list(allowed)
    parts, size = [], 0
    while True:
        options = [H for H in reps if size + G.order // H.order <= max_size]
        if not options or (size >= min_size and rng.random() < 0.35):
            break
        H = rng.choice(options)
        parts.append(coset_gset(G, H))
        size += G.order // H.order
    return disjoint_union(*parts) if parts else GSet.trivial(G, 0)


def random_map_from(S: GSet, X: GSet, rng: random.Random) -> Optional[GMap]:
    """A random equivariant map: each orbit base point goes to a random point fixed by its stabilizer."""
    images = [0] * S.size
    for orb in orbits_decompose(S).orbits:
        choices = fixed_points(X, orb.stabilizer)
        if not choices:
            return None
        y = rng.choice(choices)
        for g, act in S.action.items():
            images[act[orb.base]] = X.action[g][y]
    return GMap(S, X, images)


def random_span(X: GSet, Y: GSet, rng: random.Random, max_apex: int = 8) -> Span:
    """Random span ``X <- S -> Y`` with ``|S| <= max_apex``.

    Orbits ``G/H`` of the apex are drawn only from classes with ``X^H`` and
    ``Y^H`` nonempty, so both legs always exist; the apex is empty when no
    class qualifies.
    """
    G = X.group
    allowed = [H for H in subgroup_classes(G).representatives
               if fixed_points(X, H) and fixed_points(Y, H)]
    S = random_gset(G, rng, max_apex, allowed=allowed)
    return Span(random_map_from(S, X, rng), random_map_from(S, Y, rng))
