"""Small finite groups as multiplication tables, and a brute-force isomorphism test."""
from __future__ import annotations

import itertools
from typing import Callable, Sequence

import numpy as np

from .rack import FiniteGroup


def _compose(p: tuple, q: tuple) -> tuple:
    # (p q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def closure(gens: Sequence, mul: Callable, identity) -> list:
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def permutation_group(gens: Sequence[Sequence[int]]) -> FiniteGroup:
    """Group generated by permutations given in image form; labels are the permutations."""
    gens = [tuple(g) for g in gens]
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    elems = sorted(closure(gens, _compose, ident))
    return FiniteGroup.from_elements(elems, _compose)


def trivial() -> FiniteGroup:
    return FiniteGroup(1, 0, [[0]], (0,))


def cyclic(n: int) -> FiniteGroup:
    t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(n, 0, t, tuple((-i) % n for i in range(n)))


def symmetric(n: int) -> FiniteGroup:
    elems = sorted(itertools.permutations(range(n)))
    return FiniteGroup.from_elements(elems, _compose)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref])


def quaternion() -> FiniteGroup:
    """Q8 as the closure of the 2x2 complex matrices i and j."""
    one = ((1, 0), (0, 1))
    gi = ((1j, 0), (0, -1j))
    gj = ((0, 1), (-1, 0))

    def mul(a, b):
        return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(2)) for c in range(2)) for r in range(2))

    elems = closure([gi, gj], mul, one)
    return FiniteGroup.from_elements(elems, mul)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    n, m = a.size, b.size
    t = np.empty((n * m, n * m), dtype=np.int64)
    for i in range(n * m):
        for j in range(n * m):
            t[i, j] = a.table[i // m, j // m] * m + b.table[i % m, j % m]
    inv = tuple(a.inv[i // m] * m + b.inv[i % m] for i in range(n * m))
    return FiniteGroup(n * m, a.unit * m + b.unit, t, inv)


def groups_of_order(n: int) -> list[tuple[str, FiniteGroup]]:
    """One representative of each isomorphism class, for orders up to 8."""
    z = cyclic
    table = {
        1: [("1", trivial())],
        2: [("Z2", z(2))],
        3: [("Z3", z(3))],
        4: [("Z4", z(4)), ("Z2xZ2", direct_product(z(2), z(2)))],
        5: [("Z5", z(5))],
        6: [("Z6", z(6)), ("S3", symmetric(3))],
        7: [("Z7", z(7))],
        8: [("Z8", z(8)), ("Z4xZ2", direct_product(z(4), z(2))),
            ("Z2xZ2xZ2", direct_product(direct_product(z(2), z(2)), z(2))),
            ("D4", dihedral(4)), ("Q8", quaternion())],
    }
    if n not in table:
        raise ValueError(f"group catalogue covers orders 1..8, not {n}")
    return table[n]


def group_isomorphism(a: FiniteGroup, b: FiniteGroup) -> tuple[int, ...] | None:
    """A bijection ``f`` with ``f(xy) = f(x)f(y)``, found by brute force, or None."""
    if a.size != b.size:
        return None
    n = a.size
    rest_a = [x for x in range(n) if x != a.unit]
    rest_b = [x for x in range(n) if x != b.unit]
    order_a = sorted(_orders(a)[x] for x in range(n))
    if order_a != sorted(_orders(b)[x] for x in range(n)):
        return None
    for img in itertools.permutations(rest_b):
        f = np.empty(n, dtype=np.int64)
        f[a.unit] = b.unit
        f[rest_a] = img
        if np.array_equal(f[a.table], b.table[f[:, None], f[None, :]]):
            return tuple(int(v) for v in f)
    return None


def _orders(g: FiniteGroup) -> list[int]:
    out = []
    for x in range(g.size):
        k, y = 1, x
        while y != g.unit:
            y = g.mul(y, x)
            k += 1
        out.append(k)
    return out
