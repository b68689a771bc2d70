"""Leibniz algebras, racks and digroups: exact structure checks and numerical
differentiation of linear Lie racks."""
from .digroup import FiniteDigroup, check_digroup, decompose, enumerate_digroups, induced_rack
from .exactla import Subspace, nullspace, rref, solve, sum_and_intersection
from .leibniz import (
    Dialgebra,
    LeibnizAlgebra,
    LieAlgebra,
    Representation,
    bracket,
    check_dialgebra,
    check_leibniz,
    d_twist,
    demisemidirect,
    dialgebra_bracket,
    find_splitting,
    ker_ad,
    quotient,
    squares_ideal,
)
from .lierack import LinearLieGroupModel, RackPoint, big_phi, rack_op, tangent_bracket
from .rack import FiniteGroup, FiniteRack, check_rack, conjugation_rack, exp_ad_rack_op
from .report import AxiomError, Check, Report

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "Check", "Dialgebra", "FiniteDigroup", "FiniteGroup", "FiniteRack", "LeibnizAlgebra",
    "LieAlgebra", "LinearLieGroupModel", "RackPoint", "Report", "Representation", "Subspace", "big_phi",
    "bracket", "check_dialgebra", "check_digroup", "check_leibniz", "check_rack", "conjugation_rack",
    "d_twist", "decompose", "demisemidirect", "dialgebra_bracket", "enumerate_digroups", "exp_ad_rack_op",
    "find_splitting", "induced_rack", "ker_ad", "nullspace", "quotient", "rack_op", "rref", "solve",
    "squares_ideal", "sum_and_intersection", "tangent_bracket",
]
