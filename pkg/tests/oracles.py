"""Brute-force reference computations, written without the package's algorithms.

Groups are handled as plain sets of image tuples; composition is
``(g h)(i) = g(h(i))`` as in the package.
"""

from __future__ import annotations

from itertools import product
from math import gcd


def compose(g, h):
    return tuple(g[i] for i in h)


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    todo = [ident]
    while todo:
        x = todo.pop()
        for s in gens:
            y = compose(s, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def elements(G):
    """Element tuples of a package group or subgroup."""
    return frozenset(g.images for g in G.elements)


def all_subgroups(G):
    """Every subgroup, as the closure of one or two elements (enough for the groups used here)."""
    els = sorted(elements(G))
    deg = len(els[0])
    subs = set()
    for a in els:
        for b in els:
            subs.add(closure([a, b], deg))
    return subs


def conj(H, g):
    gi = inverse(g)
    return frozenset(compose(compose(g, h), gi) for h in H)


def subgroup_classes(G):
    els = elements(G)
    classes = []
    for H in sorted(all_subgroups(G), key=lambda S: (len(S), sorted(S))):
        if not any(H in c for c in classes):
            classes.append({conj(H, g) for g in els})
    return classes


def normalizer_order(H, G):
    return sum(1 for g in elements(G) if conj(H, g) == H)


def left_cosets(G, K):
    return {frozenset(compose(g, k) for k in K) for g in elements(G)}


def double_coset_intersections(L, K, G):
    """Partition G into sets L x K and return ``L & x K x^-1`` for one x in each."""
    remaining = set(elements(G))
    out = []
    while remaining:
        x = min(remaining)
        block = {compose(compose(l, x), k) for l in L for k in K}
        remaining -= block
        out.append(frozenset(L) & conj(K, x))
    return out


def marks(H, K, G):
    """|(G/K)^H| by scanning cosets."""
    count = 0
    for c in left_cosets(G, K):
        if all(frozenset(compose(h, x) for x in c) == c for h in H):
            count += 1
    return count


def class_of(S, classes):
    for i, c in enumerate(classes):
        if frozenset(S) in c:
            return i
    raise KeyError("subgroup not found")


def product_orbit_classes(H, K, G, classes):
    """Stabilizer classes of the orbits of G on G/H x G/K."""
    A, B = list(left_cosets(G, H)), list(left_cosets(G, K))
    points = set(product(range(len(A)), range(len(B))))
    pos_a = {c: i for i, c in enumerate(A)}
    pos_b = {c: i for i, c in enumerate(B)}

    def act(g, p):
        a = frozenset(compose(g, x) for x in A[p[0]])
        b = frozenset(compose(g, x) for x in B[p[1]])
        return pos_a[a], pos_b[b]

    out = []
    els = elements(G)
    while points:
        p = min(points)
        orbit = {act(g, p) for g in els}
        points -= orbit
        stab = frozenset(g for g in els if act(g, p) == p)
        out.append(class_of(stab, classes))
    return sorted(out)


def tate_orders(m: int, phi: int, n: int):
    """Orders of ker(phi-1)/im N and ker N/im(phi-1) on Z/m by listing elements."""
    norm = sum(pow(phi, j, m) for j in range(n)) % m if m > 1 else 0
    ker_phi = {x for x in range(m) if ((phi - 1) * x) % m == 0}
    ker_n = {x for x in range(m) if (norm * x) % m == 0}
    im_n = {(norm * x) % m for x in range(m)}
    im_phi = {((phi - 1) * x) % m for x in range(m)}
    assert im_n <= ker_phi and im_phi <= ker_n
    return len(ker_phi) // len(im_n), len(ker_n) // len(im_phi), len(ker_phi)


def cyclic_double_coset_count(n: int, a: int, b: int) -> int:
    """|L\\Z/n/K| with |G/K| = a, |G/L| = b, by listing residues."""
    K = {x for x in range(n) if x % a == 0}
    L = {x for x in range(n) if x % b == 0}
    seen, count = set(), 0
    for x in range(n):
        if x not in seen:
            count += 1
            seen |= {(l + x + k) % n for l in L for k in K}
    return count


def gcd_list(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
