"""Finite pointed racks, conjugation racks, and float-valued function racks.

A pointed rack is a table ``x o y`` with a point ``1`` such that

1. ``x o (y o z) = (x o y) o (x o z)``,
2. every left translation ``y -> x o y`` is a bijection,
3. ``1 o x = x`` and ``x o 1 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .leibniz import DEFAULT_TOL_AXIOM, LeibnizAlgebra, ad_matrix, check_leibniz
from .matrixexp import expm
from .report import AxiomError, Report

DEFAULT_TOL_RACK = 1e-9
DEFAULT_SEED = 12345
MAX_EXHAUSTIVE_SIZE = 64

AXIOM1 = "axiom 1: left distributivity"
AXIOM2 = "axiom 2: unique solvability"
AXIOM3 = "axiom 3: point"


def _table(t) -> np.ndarray:
    a = np.asarray(t, dtype=np.int64)
    n = a.shape[0] if a.ndim == 2 else -1
    if a.shape != (n, n):
        raise ValueError(f"operation table must be square, got shape {a.shape}")
    if n and (a.min() < 0 or a.max() >= n):
        raise ValueError("operation table has entries outside the carrier")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteRack:
    size: int
    point: int
    table: np.ndarray

    def __post_init__(self):
        t = _table(self.table)
        if t.shape[0] != self.size:
            raise ValueError("table size does not match declared size")
        if not 0 <= self.point < self.size:
            raise ValueError("point outside the carrier")
        object.__setattr__(self, "table", t)

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteRack) and self.size == other.size
                and self.point == other.point and np.array_equal(self.table, other.table))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    size: int
    unit: int
    table: np.ndarray
    inv: tuple[int, ...]
    labels: tuple = field(default=())

    def __post_init__(self):
        t = _table(self.table)
        if t.shape[0] != self.size or len(self.inv) != self.size:
            raise ValueError("group table or inverse map has the wrong size")
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inv", tuple(int(i) for i in self.inv))
        object.__setattr__(self, "labels", tuple(self.labels) or tuple(range(self.size)))

    @classmethod
    def from_table(cls, table, labels=()) -> "FiniteGroup":
        """Locate the unit and inverses from a multiplication table."""
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0]
        units = [e for e in range(n) if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
        if not units:
            raise AxiomError("table has no two-sided unit")
        e = units[0]
        inv = []
        for x in range(n):
            cands = [y for y in range(n) if t[x, y] == e and t[y, x] == e]
            if not cands:
                raise AxiomError(f"element {x} has no inverse")
            inv.append(cands[0])
        return cls(n, e, t, tuple(inv), labels)

    @classmethod
    def from_elements(cls, elements: Sequence, mul: Callable, key: Callable = lambda x: x) -> "FiniteGroup":
        keys = [key(x) for x in elements]
        index = {k: i for i, k in enumerate(keys)}
        n = len(elements)
        t = np.empty((n, n), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                t[i, j] = index[key(mul(x, y))]
        return cls.from_table(t, tuple(elements))

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteGroup) and self.size == other.size and self.unit == other.unit
                and np.array_equal(self.table, other.table) and self.inv == other.inv)

    __hash__ = None


def _witness_list(mask: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in w] for w in np.argwhere(mask)]


def _left_distributivity_mask(t: np.ndarray) -> np.ndarray:
    # lhs[x,y,z] = x o (y o z); rhs[x,y,z] = (x o y) o (x o z)
    n = t.shape[0]
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = t[x, t[y, z]]
    rhs = t[t[x, y], t[x, z]]
    return lhs != rhs


def check_rack(q: FiniteRack, max_size: int = MAX_EXHAUSTIVE_SIZE) -> Report:
    """Exhaustive check of the three pointed-rack axioms, each reported separately."""
    if q.size > max_size:
        raise ValueError(f"rack of size {q.size} exceeds the exhaustive-check cap {max_size}")
    t = q.table
    n, p = q.size, q.point
    rep = Report("rack")
    rep.add(AXIOM1, _witness_list(_left_distributivity_mask(t)))
    wit2 = []
    for x in range(n):
        counts = np.bincount(t[x], minlength=n)
        for b in np.flatnonzero(counts != 1):
            wit2.append({"a": x, "b": int(b), "solutions": int(counts[b])})
    rep.add(AXIOM2, wit2)
    wit3 = [{"law": "1 o x = x", "x": int(x)} for x in np.flatnonzero(t[p] != np.arange(n))]
    wit3 += [{"law": "x o 1 = 1", "x": int(x)} for x in np.flatnonzero(t[:, p] != p)]
    rep.add(AXIOM3, wit3)
    return rep


def check_group(g: FiniteGroup) -> Report:
    t = g.table
    n = g.size
    rep = Report("group")
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    rep.add("associativity", _witness_list(t[t[x, y], z] != t[x, t[y, z]]))
    ar = np.arange(n)
    rep.add("unit", [int(v) for v in np.flatnonzero((t[g.unit] != ar) | (t[:, g.unit] != ar))])
    inv = np.array(g.inv, dtype=np.int64)
    rep.add("inverses", [int(v) for v in np.flatnonzero((t[ar, inv] != g.unit) | (t[inv, ar] != g.unit))])
    return rep


def conjugation_rack(g: FiniteGroup) -> FiniteRack:
    """``x o y = x y x^-1`` with the group unit as point."""
    rep = check_group(g)
    if not rep.passed:
        raise AxiomError("not a group", rep)
    t = g.table
    n = g.size
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    inv = np.array(g.inv, dtype=np.int64)
    return FiniteRack(n, g.unit, t[t[x, y], inv[x]])


def phi(q: FiniteRack, x: int) -> tuple[int, ...]:
    """Left translation ``y -> x o y`` as a permutation tuple."""
    return tuple(int(v) for v in q.table[x])


def is_automorphism(q: FiniteRack, perm: Sequence[int]) -> bool:
    p = np.asarray(perm, dtype=np.int64)
    if sorted(p.tolist()) != list(range(q.size)):
        return False
    t = q.table
    return bool(np.array_equal(p[t], t[p[:, None], p[None, :]]))


def relabel_rack(q: FiniteRack, perm: Sequence[int]) -> FiniteRack:
    """Transport the rack structure along ``x -> perm[x]``."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(p)
    t = p[q.table[inv[:, None], inv[None, :]]]
    return FiniteRack(q.size, int(p[q.point]), t)


# -- function racks on vector spaces and matrix groups ----------------------

def exp_ad_rack_op(g: LeibnizAlgebra, x, y, tol_axiom: float = DEFAULT_TOL_AXIOM,
                   check: bool = True) -> np.ndarray:
    """``x o y = exp(ad x) y`` on a (float) Leibniz algebra."""
    gf = g if not g.exact else g.to_float()
    if check:
        rep = check_leibniz(gf, tol_axiom)
        if not rep.passed:
            raise AxiomError("algebra is not numerically Leibniz", rep)
    return expm(ad_matrix(gf, np.asarray(x, dtype=float))) @ np.asarray(y, dtype=float)


def closed_form_dtwist_rack(x, y) -> np.ndarray:
    """Closed form of the exp(ad) rack on the D-twisted Heisenberg algebra."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return y - x[1] * y[1] * np.array([0.0, 0.0, 1.0])


def tangent_bundle_rack_op(x: tuple, y: tuple) -> tuple[np.ndarray, np.ndarray]:
    """Conjugation in ``TG``: ``(X,a) o (Y,b) = (X + Ad(a)Y - Ad(a^-1)X, a b a^-1)``.

    ``X, Y`` are Lie algebra elements given as matrices, ``a, b`` group matrices.
    This operation satisfies the rack axioms on the graph of ``exp`` but not on
    all of ``TG``: ``(X, a) o (0, I) = (X - Ad(a^-1) X, I)``.  The conjugation of
    the group ``TG`` itself is :func:`tangent_bundle_conjugation`.
    """
    X, a = (np.asarray(v, dtype=float) for v in x)
    Y, b = (np.asarray(v, dtype=float) for v in y)
    ainv = np.linalg.inv(a)
    first = X + a @ Y @ ainv - ainv @ X @ a
    return first, a @ b @ ainv


def tangent_bundle_conjugation(x: tuple, y: tuple) -> tuple[np.ndarray, np.ndarray]:
    """Group conjugation in ``TG`` with ``(X,a)(Y,b) = (X + Ad(a)Y, ab)``.

    ``(X,a) o (Y,b) = (X + Ad(a)Y - Ad(aba^-1)X, aba^-1)``, a rack on all of ``TG``.
    """
    X, a = (np.asarray(v, dtype=float) for v in x)
    Y, b = (np.asarray(v, dtype=float) for v in y)
    ainv = np.linalg.inv(a)
    c = a @ b @ ainv
    return X + a @ Y @ ainv - c @ X @ np.linalg.inv(c), c


def exp_graph_point(X) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    return X, expm(X)


def left_distributivity_residual(op: Callable, x, y, z) -> float:
    """Relative residual of ``x o (y o z) = (x o y) o (x o z)`` for vector-valued ops."""
    lhs = np.asarray(op(x, op(y, z)))
    rhs = np.asarray(op(op(x, y), op(x, z)))
    scale = max(1.0, float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
    return float(np.max(np.abs(lhs - rhs))) / scale


def sample_rack_axioms(op: Callable, sample: Callable[[np.random.Generator], object], zero,
                       n_triples: int = 100, seed: int = DEFAULT_SEED,
                       tol: float = DEFAULT_TOL_RACK, name: str = "function rack") -> Report:
    """Seeded spot check of rack axioms 1 and 3 for an operation on a vector space.

    Axiom 2 holds structurally for these racks (each translation is an
    invertible linear map) and is not sampled.
    """
    rng = np.random.default_rng(seed)
    worst1, worst3 = 0.0, 0.0
    wit1, wit3 = [], []
    for k in range(n_triples):
        x, y, z = sample(rng), sample(rng), sample(rng)
        r = left_distributivity_residual(op, x, y, z)
        worst1 = max(worst1, r)
        if r > tol:
            wit1.append({"sample": k, "residual": r})
        r3 = max(float(np.max(np.abs(np.asarray(op(zero, x)) - np.asarray(x)))),
                 float(np.max(np.abs(np.asarray(op(x, zero)) - np.asarray(zero)))))
        worst3 = max(worst3, r3)
        if r3 > tol:
            wit3.append({"sample": k, "residual": r3})
    rep = Report(name)
    rep.add(AXIOM1, wit1, residual=worst1)
    rep.add(AXIOM3, wit3, residual=worst3)
    return rep


def unit_sphere_sampler(dim: int, radius: float = 1.0) -> Callable[[np.random.Generator], np.ndarray]:
    def sample(rng: np.random.Generator) -> np.ndarray:
        v = rng.standard_normal(dim)
        return radius * v / np.linalg.norm(v)
    return sample
