"""Finite digroups: axioms, bar-units, inverse group, decomposition, induced rack.

A digroup carries two associative operations ``|-`` (``vdash``) and ``-|``
(``dashv``), a distinguished bar-unit ``1`` and an inverse map, subject to

* G1  both operations associative
* G2  ``x |- (y -| z) = (x |- y) -| z``
* G3  ``x -| (y |- z) = x -| (y -| z)``
* G4  ``(x -| y) |- z = (x |- y) |- z``
* G5  ``1 |- x = x -| 1 = x``
* G6  ``x |- x^-1 = x^-1 -| x = 1``

Tables are int64 arrays indexed ``table[x, y]``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import groups
from .rack import FiniteGroup, FiniteRack, check_group, check_rack
from .report import AxiomError, Report

MAX_ENUM_ORDER = 8
MAX_BACKTRACK_ORDER = 6
AXIOMS = ("G1", "G2", "G3", "G4", "G5", "G6")


class InvariantBreach(AssertionError):
    """A structural theorem failed on a table that passed the digroup axioms."""


@dataclass(frozen=True, eq=False)
class FiniteDigroup:
    size: int
    unit: int
    vdash: np.ndarray
    dashv: np.ndarray
    inv: tuple[int, ...]

    def __post_init__(self):
        for name in ("vdash", "dashv"):
            t = np.array(getattr(self, name), dtype=np.int64)
            if t.shape != (self.size, self.size):
                raise ValueError(f"{name} table must be {self.size} x {self.size}")
            if self.size and (t.min() < 0 or t.max() >= self.size):
                raise ValueError(f"{name} table has entries outside the carrier")
            t.setflags(write=False)
            object.__setattr__(self, name, t)
        if len(self.inv) != self.size:
            raise ValueError("inverse map has the wrong length")
        object.__setattr__(self, "inv", tuple(int(i) for i in self.inv))

    @classmethod
    def from_group(cls, g: FiniteGroup) -> "FiniteDigroup":
        return cls(g.size, g.unit, g.table, g.table, g.inv)

    @property
    def inv_array(self) -> np.ndarray:
        return np.array(self.inv, dtype=np.int64)

    def L(self, x: int) -> tuple[int, ...]:
        """Left translation by ``x`` under ``|-``."""
        return tuple(int(v) for v in self.vdash[x])

    def R(self, y: int) -> tuple[int, ...]:
        """Right translation by ``y`` under ``-|``."""
        return tuple(int(v) for v in self.dashv[:, y])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteDigroup) and self.size == other.size and self.unit == other.unit
                and np.array_equal(self.vdash, other.vdash) and np.array_equal(self.dashv, other.dashv)
                and self.inv == other.inv)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FiniteDigroup(size={self.size}, unit={self.unit})"


@dataclass(frozen=True)
class DigroupDecomposition:
    bar_units: tuple[int, ...]
    inverse_group: FiniteGroup
    theta: dict = field(repr=False)        # (u, h) -> u -| h
    proj_vdash: tuple[int, ...] = field(repr=False)   # x -> x^-1 |- x
    proj_dashv: tuple[int, ...] = field(repr=False)   # x -> x -| x^-1

    @property
    def J(self) -> tuple[int, ...]:
        return tuple(self.inverse_group.labels)


def _grid(n: int):
    return (np.arange(n)[:, None, None], np.arange(n)[None, :, None], np.arange(n)[None, None, :])


def _triples(mask: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in w] for w in np.argwhere(mask)]


def _axiom_masks(L: np.ndarray, R: np.ndarray) -> dict[str, np.ndarray]:
    x, y, z = _grid(L.shape[0])
    return {
        "G1": (L[L[x, y], z] != L[x, L[y, z]]) | (R[R[x, y], z] != R[x, R[y, z]]),
        "G2": L[x, R[y, z]] != R[L[x, y], z],
        "G3": R[x, L[y, z]] != R[x, R[y, z]],
        "G4": L[R[x, y], z] != L[L[x, y], z],
    }


def check_digroup(g: FiniteDigroup) -> Report:
    """Per-axiom violation lists for G1..G6; the group flag is in ``report["is group"].note``."""
    L, R = g.vdash, g.dashv
    n, one = g.size, g.unit
    rep = Report("digroup")
    for name, mask in _axiom_masks(L, R).items():
        rep.add(name, _triples(mask))
    ar = np.arange(n)
    inv = g.inv_array
    rep.add("G5", [{"x": int(v)} for v in np.flatnonzero((L[one] != ar) | (R[:, one] != ar))])
    rep.add("G6", [{"x": int(v)} for v in np.flatnonzero((L[ar, inv] != one) | (R[inv, ar] != one))])
    same = bool(np.array_equal(L, R))
    rep.add("is group (vdash == dashv)", passed=True, note="yes" if same else "no")
    return rep


def is_group(g: FiniteDigroup) -> bool:
    return bool(np.array_equal(g.vdash, g.dashv))


def _require(g: FiniteDigroup) -> None:
    rep = check_digroup(g)
    if not rep.passed:
        raise AxiomError("table fails the digroup axioms", rep)


# -- constructions ------------------------------------------------------------

def _check_action(h: FiniteGroup, action: Sequence[Sequence[int]], m_size: int) -> None:
    if len(action) != h.size:
        raise ValueError("need one permutation of M per group element")
    for p in action:
        if sorted(p) != list(range(m_size)):
            raise ValueError(f"{tuple(p)} is not a permutation of M")
    if tuple(action[h.unit]) != tuple(range(m_size)):
        raise ValueError("the group unit must act trivially")
    for a in range(h.size):
        for b in range(h.size):
            ab = h.mul(a, b)
            if any(action[ab][u] != action[a][action[b][u]] for u in range(m_size)):
                raise ValueError("permutations do not form a group action")


def standard_digroup(m_size: int, fixed: int, h: FiniteGroup, action: Sequence[Sequence[int]],
                     require_transitive: bool = True) -> FiniteDigroup:
    """Digroup on ``M x H`` with ``(u,h) |- (v,k) = (hv, hk)`` and ``(u,h) -| (v,k) = (u, hk)``.

    Element ``(u, h)`` has index ``u * |H| + h``.  The action must fix ``fixed``
    and, unless ``require_transitive`` is off, be transitive on the other points.
    """
    _check_action(h, action, m_size)
    if any(p[fixed] != fixed for p in action):
        raise ValueError("the distinguished point is not fixed by the action")
    if require_transitive and m_size > 1:
        others = [u for u in range(m_size) if u != fixed]
        orbit = {action[a][others[0]] for a in range(h.size)}
        if orbit != set(others):
            raise ValueError("action is not transitive on M minus the fixed point")
    k = h.size
    n = m_size * k
    L = np.empty((n, n), dtype=np.int64)
    R = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        u, a = divmod(x, k)
        for y in range(n):
            v, b = divmod(y, k)
            ab = h.mul(a, b)
            L[x, y] = action[a][v] * k + ab
            R[x, y] = u * k + ab
    inv = tuple(fixed * k + h.inv[x % k] for x in range(n))
    return FiniteDigroup(n, fixed * k + h.unit, L, R, inv)


def example_4_1() -> FiniteDigroup:
    """``M = {e, a, b}``, ``H = Z2`` swapping ``a`` and ``b``: a digroup of order 6."""
    return standard_digroup(3, 0, groups.cyclic(2), [(0, 1, 2), (0, 2, 1)])


def s3_on_four_points() -> FiniteDigroup:
    """``M = {e, a, b, c}`` with ``S3`` permuting ``a, b, c``: order 24."""
    s3 = groups.symmetric(3)
    action = [(0,) + tuple(1 + p[i] for i in range(3)) for p in s3.labels]
    return standard_digroup(4, 0, s3, action)


# -- structure -----------------------------------------------------------------

def left_neutrals(g: FiniteDigroup) -> list[int]:
    ar = np.arange(g.size)
    return [e for e in range(g.size) if np.array_equal(g.vdash[e], ar)]


def right_neutrals(g: FiniteDigroup) -> list[int]:
    ar = np.arange(g.size)
    return [e for e in range(g.size) if np.array_equal(g.dashv[:, e], ar)]


def bar_units(g: FiniteDigroup) -> tuple[int, ...]:
    """All ``e`` with ``e |- x = x -| e = x``.

    Also confirms that left neutrals for ``|-`` and right neutrals for ``-|`` coincide.
    """
    _require(g)
    ln, rn = left_neutrals(g), right_neutrals(g)
    if ln != rn:
        raise InvariantBreach(f"left neutrals {ln} differ from right neutrals {rn}")
    if g.unit not in ln:
        raise InvariantBreach("distinguished unit is not a bar-unit")
    return tuple(ln)


def inverse_group(g: FiniteDigroup) -> FiniteGroup:
    """The group ``J = {x^-1}``; its labels are the digroup elements."""
    _require(g)
    J = sorted(set(g.inv))
    idx = {x: i for i, x in enumerate(J)}
    L, R = g.vdash, g.dashv
    k = len(J)
    t = np.empty((k, k), dtype=np.int64)
    for a in J:
        for b in J:
            if L[a, b] != R[a, b]:
                raise InvariantBreach(f"operations differ on J at ({a}, {b})")
            if int(L[a, b]) not in idx:
                raise InvariantBreach(f"J not closed at ({a}, {b})")
            t[idx[a], idx[b]] = idx[int(L[a, b])]
    grp = FiniteGroup(k, idx[g.unit], t, tuple(idx[g.inv[x]] for x in J), tuple(J))
    rep = check_group(grp)
    if not rep.passed:
        raise InvariantBreach(f"J fails the group axioms: {rep.failed()}")
    E = set(bar_units(g))
    inv = g.inv_array
    f = inv[inv]
    for op in (L, R):
        if not np.array_equal(f[op], L[f[:, None], f[None, :]]):
            raise InvariantBreach("x -> (x^-1)^-1 is not a homomorphism")
    if set(f.tolist()) != set(J) or {x for x in range(g.size) if f[x] == g.unit} != E:
        raise InvariantBreach("x -> (x^-1)^-1 is not onto J with kernel E")
    return grp


def decompose(g: FiniteDigroup) -> DigroupDecomposition:
    """Verify ``G = E x J`` with ``(u,h)|-(v,k) = (h o v, hk)`` and ``(u,h)-|(v,k) = (u, hk)``.

    ``theta(u, h) = u -| h`` must be a bijection intertwining both operations.
    """
    E = bar_units(g)
    grp = inverse_group(g)
    J = grp.labels
    L, R = g.vdash, g.dashv
    conj = induced_table(g)
    theta = {(u, h): int(R[u, h]) for u in E for h in J}
    if sorted(theta.values()) != list(range(g.size)):
        raise InvariantBreach("theta: E x J -> G is not a bijection")
    for (u, h), x in theta.items():
        for (v, k), y in theta.items():
            hk = int(L[h, k])
            if L[x, y] != theta[(int(conj[h, v]), hk)]:
                raise InvariantBreach(f"theta does not intertwine |- at {(u, h)}, {(v, k)}")
            if R[x, y] != theta[(u, int(R[h, k]))]:
                raise InvariantBreach(f"theta does not intertwine -| at {(u, h)}, {(v, k)}")
    inv = g.inv_array
    ar = np.arange(g.size)
    proj_l = L[inv, ar]
    proj_r = R[ar, inv]
    f = inv[inv]
    Eset = set(E)
    for x in range(g.size):
        if int(proj_l[x]) not in Eset or int(proj_r[x]) not in Eset:
            raise InvariantBreach("projection onto E leaves E")
        if L[f[x], proj_l[x]] != x or R[proj_r[x], f[x]] != x:
            raise InvariantBreach(f"element {x} is not recovered from its components")
    return DigroupDecomposition(E, grp, theta, tuple(int(v) for v in proj_l), tuple(int(v) for v in proj_r))


def inverse_uniqueness(g: FiniteDigroup) -> list[int]:
    """Elements admitting more than one inverse (always empty for a digroup)."""
    L, R = g.vdash, g.dashv
    bad = []
    for x in range(g.size):
        cands = [y for y in range(g.size) if L[x, y] == g.unit and R[y, x] == g.unit]
        if len(cands) != 1:
            bad.append(x)
    return bad


def right_group_suite(g: FiniteDigroup) -> Report:
    """Right-group facts for ``|-``, their left-group duals for ``-|``, and inverse identities."""
    _require(g)
    L, R = g.vdash, g.dashv
    n, one = g.size, g.unit
    inv = g.inv_array
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    ar = np.arange(n)
    f = inv[inv]
    rep = Report("right/left group suite")
    E = np.array(left_neutrals(g), dtype=np.int64)
    Ed = np.array(right_neutrals(g), dtype=np.int64)
    J = np.array(sorted(set(g.inv)), dtype=np.int64)
    Jset = set(J.tolist())

    def pairs(mask):
        return [[int(a), int(b)] for a, b in np.argwhere(mask)]

    def elems(mask):
        return [int(v) for v in np.flatnonzero(mask)]

    # (G, |-) as a right group
    rep.add("RG1: x^-1 |- x |- y = x |- x^-1 |- y = y",
            pairs((L[L[inv[x], x], y] != y) | (L[L[x, inv[x]], y] != y)))
    rep.add("RG2: x |- 1 = (x^-1)^-1", elems(L[ar, one] != f))
    rep.add("RG3: ((x^-1)^-1)^-1 = x^-1", elems(inv[f] != inv))
    rep.add("RG4: (x |- y)^-1 = y^-1 |- x^-1", pairs(inv[L[x, y]] != L[inv[y], inv[x]]))
    jt = L[J[:, None], J[None, :]]
    rep.add("RG5: J is a group, E is right zero",
            [{"J not closed": True}] * int(not set(jt.flatten().tolist()) <= Jset)
            + pairs(L[E[:, None], E[None, :]] != E[None, :]))
    rep.add("RG6: x -> (x^-1)^-1 is an epimorphism onto J with kernel E",
            pairs(f[L[x, y]] != L[f[x], f[y]])
            + [{"image": sorted(set(f.tolist()))}] * int(set(f.tolist()) != Jset)
            + [{"kernel": elems(f == one)}] * int(elems(f == one) != E.tolist()))
    p = L[inv, ar]
    rep.add("RG7: x -> x^-1 |- x is an epimorphism onto E with kernel J",
            pairs(p[L[x, y]] != L[p[x], p[y]])
            + [{"image": sorted(set(p.tolist()))}] * int(sorted(set(p.tolist())) != E.tolist())
            + [{"kernel": elems(p == one)}] * int(elems(p == one) != J.tolist()))
    prod = L[J[:, None], E[None, :]]
    ok8 = sorted(prod.flatten().tolist()) == list(range(n))
    hom8 = True
    for a, h in enumerate(J):
        for b, e in enumerate(E):
            for c, k in enumerate(J):
                for d, e2 in enumerate(E):
                    if L[prod[a, b], prod[c, d]] != L[L[h, k], e2]:
                        hom8 = False
    rep.add("RG8: G = J |- E is the direct product of J and E", [{"bijective": ok8, "homomorphic": hom8}] * int(not (ok8 and hom8)))

    # (G, -|) as a left group
    rep.add("LG1: y -| x -| x^-1 = y -| x^-1 -| x = y",
            pairs((R[y, R[x, inv[x]]] != y) | (R[y, R[inv[x], x]] != y)))
    rep.add("LG2: 1 -| x = (x^-1)^-1", elems(R[one, ar] != f))
    rep.add("LG3: ((x^-1)^-1)^-1 = x^-1", elems(inv[f] != inv))
    rep.add("LG4: (x -| y)^-1 = y^-1 -| x^-1", pairs(inv[R[x, y]] != R[inv[y], inv[x]]))
    rep.add("LG5: J is a group, E is left zero",
            [{"J not closed": True}] * int(not set(R[J[:, None], J[None, :]].flatten().tolist()) <= Jset)
            + pairs(R[Ed[:, None], Ed[None, :]] != Ed[:, None]))
    rep.add("LG6: x -> (x^-1)^-1 is an epimorphism of -| onto J with kernel E",
            pairs(f[R[x, y]] != R[f[x], f[y]])
            + [{"kernel": elems(f == one)}] * int(elems(f == one) != Ed.tolist()))
    q = R[ar, inv]
    rep.add("LG7: x -> x -| x^-1 is an epimorphism onto E with kernel J",
            pairs(q[R[x, y]] != R[q[x], q[y]])
            + [{"image": sorted(set(q.tolist()))}] * int(sorted(set(q.tolist())) != Ed.tolist())
            + [{"kernel": elems(q == one)}] * int(elems(q == one) != J.tolist()))
    prod = R[Ed[:, None], J[None, :]]
    ok8 = sorted(prod.flatten().tolist()) == list(range(n))
    hom8 = all(R[prod[a, b], prod[c, d]] == R[e, R[h, k]]
               for a, e in enumerate(Ed) for b, h in enumerate(J)
               for c, _ in enumerate(Ed) for d, k in enumerate(J))
    rep.add("LG8: G = E -| J is the direct product of E and J", [{"bijective": ok8, "homomorphic": hom8}] * int(not (ok8 and hom8)))

    # shared units and inverse identities
    rep.add("units: left neutrals of |- = right neutrals of -|",
            [{"left": E.tolist(), "right": Ed.tolist()}] * int(E.tolist() != Ed.tolist()))
    rep.add("INV1: x |- 1 = 1 -| x", elems(L[ar, one] != R[one, ar]))
    rep.add("INV2: (x|-y)^-1 = y^-1|-x^-1 = y^-1-|x^-1 = (x-|y)^-1",
            pairs((inv[L[x, y]] != L[inv[y], inv[x]]) | (L[inv[y], inv[x]] != R[inv[y], inv[x]])
                  | (R[inv[y], inv[x]] != inv[R[x, y]])))
    rep.add("INV3: J is a group on which |- = -|",
            [{"differ": True}] * int(not np.array_equal(L[J[:, None], J[None, :]], R[J[:, None], J[None, :]])))
    rep.add("INV4: x -> (x^-1)^-1 is a digroup epimorphism onto J with kernel E",
            pairs((f[L[x, y]] != L[f[x], f[y]]) | (f[R[x, y]] != R[f[x], f[y]])))
    rep.add("inverse uniqueness", inverse_uniqueness(g))
    return rep


# -- conjugation ------------------------------------------------------------------

def induced_table(g: FiniteDigroup) -> np.ndarray:
    """``x o y = x |- y -| x^-1``."""
    n = g.size
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return g.dashv[g.vdash[x, y], g.inv_array[x]]


def conjugation_lemmas(g: FiniteDigroup) -> Report:
    """Exhaustive check of the conjugation identities behind the induced rack."""
    _require(g)
    L, R = g.vdash, g.dashv
    C = induced_table(g)
    n, one = g.size, g.unit
    x, y, z = _grid(n)
    ar = np.arange(n)
    E = np.array(bar_units(g), dtype=np.int64)
    Eset = set(E.tolist())
    J = np.array(sorted(set(g.inv)), dtype=np.int64)
    rep = Report("conjugation lemmas")
    rep.add("C1: x o (y o z) = (x |- y) o z = (x -| y) o z",
            _triples((C[x, C[y, z]] != C[L[x, y], z]) | (C[L[x, y], z] != C[R[x, y], z])))
    rep.add("C2: 1 o x = x and x o 1 = 1",
            [int(v) for v in np.flatnonzero((C[one] != ar) | (C[:, one] != one))])
    rep.add("C3: x o u in E for u in E",
            [[int(a), int(u)] for a in range(n) for u in E if int(C[a, u]) not in Eset])
    act = []
    for h in J:
        for k in J:
            for u in E:
                if C[L[h, k], u] != C[h, C[k, u]]:
                    act.append([int(h), int(k), int(u)])
    act += [[one, one, int(u)] for u in E if C[one, u] != u]
    rep.add("C4: J acts on E via o", act)
    rep.add("K1: x |- y = (x o y) -| x", [[int(a), int(b)] for a, b in np.argwhere(L != R[C, ar[:, None]])])
    rep.add("K2: x o (y |- z) = (x o y) |- (x o z)", _triples(C[x, L[y, z]] != L[C[x, y], C[x, z]]))
    rep.add("K3: x o (y -| z) = (x o y) -| (x o z)", _triples(C[x, R[y, z]] != R[C[x, y], C[x, z]]))
    rep.add("K4: x o (y o z) = (x o y) o (x o z)", _triples(C[x, C[y, z]] != C[C[x, y], C[x, z]]))
    return rep


def k1_with_vdash_witnesses(g: FiniteDigroup) -> list[list[int]]:
    """Pairs where ``x |- y = (x o y) |- x`` fails.

    With ``x = 1`` the right side is ``y |- 1 = (y^-1)^-1``, so every ``y``
    outside ``J`` is a witness; the identity holds with ``-|`` in place of the
    outer ``|-`` (checked as K1 in :func:`conjugation_lemmas`).
    """
    C = induced_table(g)
    ar = np.arange(g.size)
    return [[int(a), int(b)] for a, b in np.argwhere(g.vdash != g.vdash[C, ar[:, None]])]


def induced_rack(g: FiniteDigroup) -> FiniteRack:
    """The pointed rack ``(G, o, 1)``; raises if any conjugation identity fails."""
    rack = FiniteRack(g.size, g.unit, induced_table(g))
    rep = check_rack(rack)
    lem = conjugation_lemmas(g)
    if not (rep.passed and lem.passed):
        raise InvariantBreach(f"induced rack checks failed: {rep.failed() + lem.failed()}")
    return rack


# -- isomorphism and enumeration ------------------------------------------------------

def _classes(g: FiniteDigroup) -> list[list[int]]:
    E = set(left_neutrals(g))
    J = set(g.inv)
    one = g.unit
    return [[one],
            sorted(E - {one}),
            sorted(J - {one}),
            sorted(set(range(g.size)) - E - J)]


def canonical_form(g: FiniteDigroup) -> bytes:
    """Lexicographically least relabelling, searched over bijections that
    fix the unit and preserve the bar-unit and inverse-group classes."""
    cls = _classes(g)
    blocks = []
    start = 0
    for c in cls:
        blocks.append((c, list(range(start, start + len(c)))))
        start += len(c)
    perms = []
    for choice in itertools.product(*(itertools.permutations(c) for c, _ in blocks)):
        p = np.empty(g.size, dtype=np.int64)
        for src, (_, dst) in zip(choice, blocks):
            p[list(src)] = dst
        perms.append(p)
    P = np.array(perms)                       # P[k, old] = new
    Q = np.argsort(P, axis=1)                 # Q[k, new] = old
    best = None
    for T in (g.vdash, g.dashv):
        old = T[Q[:, :, None], Q[:, None, :]].reshape(len(P), -1)
        rel = np.take_along_axis(P, old, axis=1)
        best = rel if best is None else np.concatenate([best, rel], axis=1)
    order = np.lexsort(best.T[::-1])
    return best[order[0]].astype(np.int8).tobytes()


def are_isomorphic(a: FiniteDigroup, b: FiniteDigroup) -> bool:
    return a.size == b.size and canonical_form(a) == canonical_form(b)


def _pointed_actions(j: FiniteGroup, e_size: int) -> list[list[tuple[int, ...]]]:
    """All actions of ``j`` on ``{0..e_size-1}`` fixing 0."""
    m = e_size - 1
    sym = list(itertools.permutations(range(m)))
    gens = _generators(j)
    out = []
    for imgs in itertools.product(sym, repeat=len(gens)):
        hom = _extend_homomorphism(j, gens, imgs, m)
        if hom is not None:
            out.append([(0,) + tuple(1 + hom[a][i] for i in range(m)) for a in range(j.size)])
    return out


def _generators(j: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {j.unit}
    for x in range(j.size):
        if x not in span:
            gens.append(x)
            span = set(groups.closure([*gens], j.mul, j.unit))
    return gens


def _extend_homomorphism(j: FiniteGroup, gens, imgs, m):
    ident = tuple(range(m))
    hom = {j.unit: ident}
    frontier = [j.unit]
    while frontier:
        nxt = []
        for a in frontier:
            for g, pg in zip(gens, imgs):
                b = j.mul(a, g)
                pb = tuple(hom[a][pg[i]] for i in range(m))
                if b in hom:
                    if hom[b] != pb:
                        return None
                else:
                    hom[b] = pb
                    nxt.append(b)
        frontier = nxt
    for a in range(j.size):
        for b in range(j.size):
            if hom[j.mul(a, b)] != tuple(hom[a][hom[b][i]] for i in range(m)):
                return None
    return hom


def enumerate_digroups(order: int) -> list[FiniteDigroup]:
    """All digroups of the given order up to isomorphism, assembled as ``E x J``.

    For each factorisation ``|E| |J| = order``, each group ``J`` and each action
    of ``J`` on a pointed set ``E`` the product construction is built and
    de-duplicated by canonical form.
    """
    if not 1 <= order <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration supports orders 1..{MAX_ENUM_ORDER}")
    found: dict[bytes, FiniteDigroup] = {}
    for e_size in range(1, order + 1):
        if order % e_size:
            continue
        for _, j in groups.groups_of_order(order // e_size):
            for action in _pointed_actions(j, e_size):
                d = standard_digroup(e_size, 0, j, action, require_transitive=False)
                found.setdefault(canonical_form(d), d)
    return [found[k] for k in sorted(found)]


def factorization_counts(digroups: Sequence[FiniteDigroup]) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for d in digroups:
        key = (len(left_neutrals(d)), len(set(d.inv)))
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


# -- raw backtracking over G1, G2, G5, G6 -----------------------------------------

class _Contradiction(Exception):
    pass


def _backtrack_vdash(n: int):
    """Associative tables with left neutral 0, permutation rows and right inverses.

    Rows are permutations because G1, G5, G6 alone force ``x^-1 |- x`` to be
    left neutral, so ``y -> x |- y`` is injective.
    """
    L = -np.ones((n, n), dtype=np.int64)
    L[0] = np.arange(n)
    yield from _fill(L, [], None, rows=True)


def _backtrack_dashv(L: np.ndarray):
    """Tables for ``-|`` compatible with a fixed ``|-`` under G1, G2, G5, G6.

    Columns are permutations (the dual of the row argument for ``|-``).
    """
    n = L.shape[0]
    R = -np.ones((n, n), dtype=np.int64)
    R[:, 0] = np.arange(n)
    yield from _fill(R, [], L, rows=False)


def _propagate(T: np.ndarray, queue: list, L: np.ndarray | None, rows: bool) -> None:
    n = T.shape[0]
    while queue:
        a, b, v = queue.pop()
        cur = T[a, b]
        if cur >= 0:
            if cur != v:
                raise _Contradiction
            continue
        line = T[a] if rows else T[:, b]
        if v in line:
            raise _Contradiction
        T[a, b] = v
        # associativity (a*b)*c = a*(b*c) and (z*a)*b = z*(a*b)
        for c in range(n):
            bc = T[b, c]
            if bc >= 0:
                lhs, rhs = T[v, c], T[a, bc]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    raise _Contradiction
                if lhs >= 0 and rhs < 0:
                    queue.append((a, int(bc), int(lhs)))
                elif rhs >= 0 and lhs < 0:
                    queue.append((int(v), c, int(rhs)))
            za = T[c, a]
            if za >= 0:
                lhs, rhs = T[za, b], T[c, v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    raise _Contradiction
                if lhs >= 0 and rhs < 0:
                    queue.append((c, int(v), int(lhs)))
                elif rhs >= 0 and lhs < 0:
                    queue.append((int(za), b, int(rhs)))
        # the new cell as the outer product: (p*q)*b with p*q = a, and a*(q*r) with q*r = b
        for p, q in np.argwhere(T == a):
            qb = T[q, b]
            if qb >= 0:
                rhs = T[p, qb]
                if rhs >= 0 and rhs != v:
                    raise _Contradiction
                if rhs < 0:
                    queue.append((int(p), int(qb), int(v)))
        for q, r in np.argwhere(T == b):
            aq = T[a, q]
            if aq >= 0:
                lhs = T[aq, r]
                if lhs >= 0 and lhs != v:
                    raise _Contradiction
                if lhs < 0:
                    queue.append((int(aq), int(r), int(v)))
        if L is not None:
            # G2 with x |- (a -| b) = (x |- a) -| b
            for x in range(n):
                queue.append((int(L[x, a]), b, int(L[x, v])))


def _fill(T: np.ndarray, queue: list, L: np.ndarray | None, rows: bool):
    T = T.copy()
    try:
        _propagate(T, queue, L, rows)
    except _Contradiction:
        return
    free = np.argwhere(T < 0)
    if len(free) == 0:
        yield T
        return
    best, best_dom = None, None
    for a, b in free:
        line = T[a] if rows else T[:, b]
        dom = [v for v in range(T.shape[0]) if v not in line]
        if best is None or len(dom) < len(best_dom):
            best, best_dom = (int(a), int(b)), dom
            if len(dom) <= 1:
                break
    for v in best_dom:
        yield from _fill(T, [(best[0], best[1], v)], L, rows)


def backtrack_digroups(order: int) -> tuple[list[FiniteDigroup], dict]:
    """Direct search for tables satisfying only G1, G2, G5, G6 with unit 0.

    Returns representatives up to isomorphism and statistics including how many
    labelled solutions also satisfy G3 and G4.
    """
    if not 1 <= order <= MAX_BACKTRACK_ORDER:
        raise ValueError(f"raw backtracking supports orders 1..{MAX_BACKTRACK_ORDER}")
    n = order
    found: dict[bytes, FiniteDigroup] = {}
    labelled = 0
    g34_fail = 0
    x, y, z = _grid(n)
    for L in _backtrack_vdash(n):
        if not all(any(L[a, b] == 0 for b in range(n)) for a in range(n)):
            continue
        if (L[L[x, y], z] != L[x, L[y, z]]).any():
            continue
        for R in _backtrack_dashv(L):
            inv = []
            for a in range(n):
                cands = [b for b in range(n) if L[a, b] == 0 and R[b, a] == 0]
                if not cands:
                    break
                inv.append(cands[0])
            else:
                masks = _axiom_masks(L, R)
                if masks["G1"].any() or masks["G2"].any():
                    continue
                labelled += 1
                if masks["G3"].any() or masks["G4"].any():
                    g34_fail += 1
                d = FiniteDigroup(n, 0, L, R, tuple(inv))
                found.setdefault(canonical_form(d), d)
    reps = [found[k] for k in sorted(found)]
    return reps, {"labelled": labelled, "g3_g4_failures": g34_fail, "classes": len(reps)}
