"""Minimal corruptions of valid structures, one per axiom, for sensitivity tests.

Each :class:`Mutation` starts from a structure that passes its checker and
changes as little as possible.  ``intended`` is the set of checks the
corrupted structure is meant to fail.  Where no minimal change can isolate a
single axiom, ``intended`` is the smallest failing set we know of and
``isolated`` is False; ``reason`` says why.

Rack axiom 1 cannot be broken alone by changing one cell, because any single
change to a row that is a permutation leaves it a non-permutation.  The
fixture therefore swaps two cells of one row.  G3 and G4 cannot fail alone,
since G1, G2, G5 and G6 imply them.  G5 cannot fail alone by moving the unit,
because G6 pins ``x |- x^-1`` to the unit.  For G1, G2, and G5 under a
one-cell table change, an exhaustive solver search over all digroups of order
at most 5 found no isolating mutation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import exactla as la
from . import fixtures as fx
from . import groups
from .digroup import FiniteDigroup, check_digroup, example_4_1
from .leibniz import Dialgebra, LeibnizAlgebra, check_dialgebra, check_leibniz
from .rack import AXIOM1, AXIOM2, AXIOM3, FiniteRack, check_rack, conjugation_rack
from .report import Report

_DIGROUP_CHECKS = ("G1", "G2", "G3", "G4", "G5", "G6")


@dataclass(frozen=True)
class Mutation:
    name: str
    kind: str
    target: str
    change: str
    build: Callable[[], object] = field(repr=False)
    base: Callable[[], object] = field(repr=False)
    intended: frozenset = frozenset()
    reason: str = ""

    @property
    def isolated(self) -> bool:
        return self.intended == frozenset({self.target})

    def check(self, obj=None) -> Report:
        obj = self.build() if obj is None else obj
        return CHECKERS[self.kind](obj)


CHECKERS = {
    "leibniz": check_leibniz,
    "rack": check_rack,
    "digroup": check_digroup,
    "dialgebra": check_dialgebra,
}


def failed_set(report: Report) -> frozenset:
    return frozenset(report.failed())


# -- Leibniz -------------------------------------------------------------------------

def _leibniz_mut() -> LeibnizAlgebra:
    g = fx.example_2_2()
    c = g.c.copy()
    c[2, 2, 2] = Fraction(1)
    return LeibnizAlgebra(c, g.basis_names)


# -- racks -------------------------------------------------------------------------

def _s3_rack() -> FiniteRack:
    return conjugation_rack(groups.symmetric(3))


def _rack_swap() -> FiniteRack:
    q = _s3_rack()
    t = q.table.copy()
    t[1, 1], t[1, 2] = t[1, 2], t[1, 1]
    return FiniteRack(q.size, q.point, t)


def _trivial_rack2() -> FiniteRack:
    return FiniteRack(2, 0, np.array([[0, 1], [0, 1]]))


def _rack_collapse() -> FiniteRack:
    t = np.array([[0, 1], [0, 0]])
    return FiniteRack(2, 0, t)


def _rack_point() -> FiniteRack:
    q = _s3_rack()
    return FiniteRack(q.size, 1, q.table)


# -- digroups ----------------------------------------------------------------------

def _digroup_cell(table: str, x: int, y: int, v: int) -> Callable[[], FiniteDigroup]:
    def build() -> FiniteDigroup:
        g = example_4_1()
        tabs = {"vdash": g.vdash.copy(), "dashv": g.dashv.copy()}
        tabs[table][x, y] = v
        return FiniteDigroup(g.size, g.unit, tabs["vdash"], tabs["dashv"], g.inv)
    return build


def _digroup_unit() -> FiniteDigroup:
    g = example_4_1()
    return FiniteDigroup(g.size, 1, g.vdash, g.dashv, g.inv)


def _digroup_inv() -> FiniteDigroup:
    g = example_4_1()
    inv = list(g.inv)
    inv[0] = 1
    return FiniteDigroup(g.size, g.unit, g.vdash, g.dashv, tuple(inv))


# -- dialgebras --------------------------------------------------------------------

def _line_dialgebra() -> Dialgebra:
    """``V + End(V)`` for ``V = R``: basis ``v, E`` with ``E |- v = v``, ``E |- E = E -| E = E``."""
    return fx.example_2_3(1)


def _bump(table: str, idx: tuple, delta: int, base: Callable[[], Dialgebra]) -> Callable[[], Dialgebra]:
    def build() -> Dialgebra:
        d = base()
        tabs = {"vdash": d.vdash.copy(), "dashv": d.dashv.copy()}
        tabs[table][idx] += delta
        return Dialgebra(tabs["vdash"], tabs["dashv"], d.basis_names)
    return build


def _idempotent_line() -> Dialgebra:
    """Two-dimensional associative algebra ``f . f = f`` (``e`` annihilates), with ``|- = -|``."""
    c = la.zeros(2, 2, 2)
    c[1, 1, 1] = Fraction(1)
    return Dialgebra(c, c.copy(), ("e", "f"))


_NO_CELL = "no one-cell change isolates this axiom (exhaustive search, order <= 5)"
_REDUNDANT = "implied by G1, G2, G5, G6, so it never fails alone"

MUTATIONS: dict[str, Mutation] = {m.name: m for m in [
    Mutation("leibniz", "leibniz", "leibniz identity", "ex2.2 with [e3, e3] = e3",
             _leibniz_mut, fx.example_2_2, frozenset({"leibniz identity"})),
    Mutation("rack-axiom1", "rack", AXIOM1, "S3 conjugation rack, cells (1,1) and (1,2) swapped",
             _rack_swap, _s3_rack, frozenset({AXIOM1}),
             "a single cell change always breaks axiom 2 as well; two cells of one row are swapped"),
    Mutation("rack-axiom2", "rack", AXIOM2, "trivial 2-element rack with 1 o 1 = 0",
             _rack_collapse, _trivial_rack2, frozenset({AXIOM2})),
    Mutation("rack-axiom3", "rack", AXIOM3, "S3 conjugation rack with a transposition as point",
             _rack_point, _s3_rack, frozenset({AXIOM3})),
    Mutation("digroup-G1", "digroup", "G1", "ex4.1 with vdash[1,0] = 3",
             _digroup_cell("vdash", 1, 0, 3), example_4_1, frozenset({"G1", "G2", "G4"}), _NO_CELL),
    Mutation("digroup-G2", "digroup", "G2", "ex4.1 with vdash[1,0] = 3",
             _digroup_cell("vdash", 1, 0, 3), example_4_1, frozenset({"G1", "G2", "G4"}), _NO_CELL),
    Mutation("digroup-G3", "digroup", "G3", "ex4.1 with dashv[0,1] = 3",
             _digroup_cell("dashv", 0, 1, 3), example_4_1, frozenset({"G1", "G2", "G3"}), _REDUNDANT),
    Mutation("digroup-G4", "digroup", "G4", "ex4.1 with vdash[1,0] = 3",
             _digroup_cell("vdash", 1, 0, 3), example_4_1, frozenset({"G1", "G2", "G4"}), _REDUNDANT),
    Mutation("digroup-G5", "digroup", "G5", "ex4.1 with unit moved to element 1",
             _digroup_unit, example_4_1, frozenset({"G5", "G6"}),
             "moving the unit breaks G6 too; " + _NO_CELL),
    Mutation("digroup-G6", "digroup", "G6", "ex4.1 with inv[0] = 1",
             _digroup_inv, example_4_1, frozenset({"G6"})),
    Mutation("dialgebra-assoc-vdash", "dialgebra", "associativity (vdash)", "ex2.3 (V = R) with v |- v += E",
             _bump("vdash", (1, 0, 0), 1, _line_dialgebra), _line_dialgebra,
             frozenset({"associativity (vdash)"})),
    Mutation("dialgebra-assoc-dashv", "dialgebra", "associativity (dashv)", "ex2.3 (V = R) with v -| E -= v",
             _bump("dashv", (0, 1, 0), -1, _line_dialgebra), _line_dialgebra,
             frozenset({"associativity (dashv)"})),
    Mutation("dialgebra-D1", "dialgebra", "D1", "f.f = f with f |- f = e + f",
             _bump("vdash", (1, 1, 0), 1, _idempotent_line), _idempotent_line, frozenset({"D1"})),
    Mutation("dialgebra-D2", "dialgebra", "D2", "ex2.3 (V = R) with v -| v = v",
             _bump("dashv", (0, 0, 0), 1, _line_dialgebra), _line_dialgebra, frozenset({"D2"})),
    Mutation("dialgebra-D3", "dialgebra", "D3", "ex2.3 (V = R) with E -| E = 0",
             _bump("dashv", (1, 1, 1), -1, _line_dialgebra), _line_dialgebra, frozenset({"D3"})),
]}
