"""Named built-in structures, so every command can run without input files."""
from __future__ import annotations

from . import digroup as dg
from . import fixtures as fx
from . import groups
from . import lierack as lr
from .digroup import FiniteDigroup
from .mutations import MUTATIONS
from .rack import FiniteRack, conjugation_rack


def _induced(g: FiniteDigroup) -> FiniteRack:
    return dg.induced_rack(g)


BUILTINS: dict[str, dict] = {
    "leibniz": dict(fx.LEIBNIZ_FIXTURES),
    "dialgebra": {
        "ex2.3": lambda: fx.example_2_3(2),
        "ex2.3-n1": lambda: fx.example_2_3(1),
        "ex2.3-twisted": lambda: fx.example_2_3_twisted(2),
    },
    "rack": {
        "trivial-1": lambda: FiniteRack(1, 0, [[0]]),
        "z2-conj": lambda: conjugation_rack(groups.cyclic(2)),
        "s3-conj": lambda: conjugation_rack(groups.symmetric(3)),
        "ex4.1-induced": lambda: _induced(dg.example_4_1()),
    },
    "digroup": {
        "ex4.1": dg.example_4_1,
        "s3-on-4": dg.s3_on_four_points,
        "z2": lambda: FiniteDigroup.from_group(groups.cyclic(2)),
        "s3": lambda: FiniteDigroup.from_group(groups.symmetric(3)),
    },
    "group": {
        "z2": lambda: groups.cyclic(2),
        "s3": lambda: groups.symmetric(3),
    },
    "model": dict(lr.BUILTIN_MODELS),
}

for _m in MUTATIONS.values():
    BUILTINS[_m.kind]["mut-" + _m.name] = _m.build

# algebras whose numerical path is the exp(ad) rack rather than a linear Lie rack
EXPAD_MODELS = {"heisenberg-dtwist": fx.heisenberg_dtwist}


def names(kind: str) -> list[str]:
    return sorted(BUILTINS.get(kind, {}))


def get(kind: str, name: str):
    return BUILTINS[kind][name]()
