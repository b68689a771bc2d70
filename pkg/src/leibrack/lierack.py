"""Linear Lie racks and digroups on ``V x H`` for matrix groups ``H``, and their
tangent Leibniz algebras recovered by finite differences.

Group elements are built as products of exponentials of Lie algebra elements.
Each :class:`RackPoint` carries the group element twice: as an ambient matrix
(used for ``Ad``) and as the matrix by which it acts on the module ``V``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import exactla as la
from .exactla import Subspace
from .leibniz import (
    LeibnizAlgebra,
    action_on,
    in_basis,
    is_skew,
    leibniz_residual,
    restrict,
)
from .matrixexp import expm
from .report import AxiomError, Report

TOL_MODEL = 1e-10
TOL_PHI = 1e-6
TOL_BRACKET = 1e-3
STEP_PHI = 1e-5
STEP_AD = 1e-4


@dataclass(frozen=True, eq=False)
class LinearLieGroupModel:
    """A matrix Lie algebra ``h`` (``lie_basis``) with a representation ``rho`` on ``V``."""

    lie_basis: tuple
    rho_basis: tuple
    module_dim: int
    ambient: int = 0
    name: str = ""
    _struct: np.ndarray = field(init=False, repr=False)
    _coord_pinv: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        lb = tuple(np.asarray(m, dtype=float) for m in self.lie_basis)
        rb = tuple(np.asarray(m, dtype=float) for m in self.rho_basis)
        m = lb[0].shape[0] if lb else self.ambient
        object.__setattr__(self, "lie_basis", lb)
        object.__setattr__(self, "rho_basis", rb)
        object.__setattr__(self, "ambient", m)
        if len(lb) != len(rb):
            raise ValueError("need one module matrix per Lie algebra basis element")
        for a in lb:
            if a.shape != (m, m):
                raise ValueError("Lie algebra basis matrices must share one square shape")
        for r in rb:
            if r.shape != (self.module_dim, self.module_dim):
                raise ValueError("module matrices must be module_dim square")
        flat = np.array([a.ravel() for a in lb]).T if lb else np.zeros((m * m, 0))
        if lb and np.linalg.matrix_rank(flat) < len(lb):
            raise AxiomError("lie_basis matrices are linearly dependent (realization not faithful)")
        pinv = np.linalg.pinv(flat) if lb else np.zeros((0, m * m))
        object.__setattr__(self, "_coord_pinv", pinv)
        k = len(lb)
        c = np.zeros((k, k, k))
        for i in range(k):
            for j in range(k):
                c[i, j] = self.coords(lb[i] @ lb[j] - lb[j] @ lb[i])
        object.__setattr__(self, "_struct", c)

    @property
    def lie_dim(self) -> int:
        return len(self.lie_basis)

    @property
    def tangent_dim(self) -> int:
        return self.module_dim + self.lie_dim

    @property
    def structure_constants(self) -> np.ndarray:
        return self._struct

    def coords(self, X: np.ndarray) -> np.ndarray:
        """Coordinates of a matrix in ``lie_basis`` (least squares)."""
        return self._coord_pinv @ np.asarray(X, dtype=float).ravel()

    def matrix(self, coeffs) -> np.ndarray:
        out = np.zeros((self.ambient, self.ambient))
        for a, m in zip(coeffs, self.lie_basis):
            out = out + a * m
        return out

    def rho(self, coeffs) -> np.ndarray:
        out = np.zeros((self.module_dim, self.module_dim))
        for a, m in zip(coeffs, self.rho_basis):
            out = out + a * m
        return out

    def check(self, tol: float = TOL_MODEL) -> Report:
        """Closure of ``lie_basis`` under commutators and the representation property."""
        rep = Report(f"model {self.name}".strip())
        k = self.lie_dim
        clo, hom = [], []
        worst_c = worst_h = 0.0
        for i in range(k):
            for j in range(k):
                comm = self.lie_basis[i] @ self.lie_basis[j] - self.lie_basis[j] @ self.lie_basis[i]
                r = float(np.max(np.abs(self.matrix(self._struct[i, j]) - comm), initial=0.0))
                worst_c = max(worst_c, r)
                if r > tol:
                    clo.append({"at": [i, j], "residual": r})
                rc = self.rho_basis[i] @ self.rho_basis[j] - self.rho_basis[j] @ self.rho_basis[i]
                r = float(np.max(np.abs(self.rho(self._struct[i, j]) - rc), initial=0.0))
                worst_h = max(worst_h, r)
                if r > tol:
                    hom.append({"at": [i, j], "residual": r})
        rep.add("lie_basis closed under commutator", clo, residual=worst_c)
        rep.add("rho is a representation", hom, residual=worst_h)
        return rep

    def point(self, v=None, X=None) -> "RackPoint":
        """``(v, exp(X))`` for module vector ``v`` and Lie algebra coordinates ``X``."""
        v = np.zeros(self.module_dim) if v is None else np.asarray(v, dtype=float)
        X = np.zeros(self.lie_dim) if X is None else np.asarray(X, dtype=float)
        return RackPoint(v, expm(self.matrix(X)), expm(self.rho(X)))

    def unit(self) -> "RackPoint":
        return RackPoint(np.zeros(self.module_dim), np.eye(self.ambient), np.eye(self.module_dim))

    def random_point(self, rng: np.random.Generator, factors: int = 2, scale: float = 1.0) -> "RackPoint":
        """A product of exponentials of random unit-norm algebra elements."""
        v = rng.standard_normal(self.module_dim)
        if self.module_dim:
            v = scale * v / np.linalg.norm(v)
        a = np.eye(self.ambient)
        m = np.eye(self.module_dim)
        for _ in range(factors):
            X = rng.standard_normal(self.lie_dim)
            if self.lie_dim:
                X = scale * X / np.linalg.norm(X)
            a = a @ expm(self.matrix(X))
            m = m @ expm(self.rho(X))
        return RackPoint(v, a, m)

    def closed_form_bracket(self) -> np.ndarray:
        """Structure constants of ``[u + X, v + Y] = Xv + [X, Y]`` on ``V + h``."""
        d, k = self.module_dim, self.lie_dim
        n = d + k
        c = np.zeros((n, n, n))
        c[d:, d:, d:] = self._struct
        for a in range(k):
            for i in range(d):
                c[d + a, i, :d] = self.rho_basis[a][:, i]
        return c


@dataclass(frozen=True, eq=False)
class RackPoint:
    """``(v, A)`` with ``A`` given both as the ambient matrix ``a`` and its module action ``m``."""

    v: np.ndarray
    a: np.ndarray
    m: np.ndarray

    def inverse_group(self) -> "RackPoint":
        return RackPoint(np.zeros_like(self.v), np.linalg.inv(self.a), np.linalg.inv(self.m))


def _invertible(x: RackPoint) -> None:
    if np.linalg.cond(x.a) > 1e12 or (x.m.size and np.linalg.cond(x.m) > 1e12):
        raise np.linalg.LinAlgError("group component is singular")


def rack_op(model: LinearLieGroupModel, x: RackPoint, y: RackPoint) -> RackPoint:
    """``(u, A) o (v, B) = (A v, A B A^-1)``."""
    _invertible(x)
    ainv = np.linalg.inv(x.a)
    minv = np.linalg.inv(x.m) if x.m.size else x.m
    return RackPoint(x.m @ y.v, x.a @ y.a @ ainv, x.m @ y.m @ minv)


def digroup_ops(model: LinearLieGroupModel, x: RackPoint, y: RackPoint) -> tuple[RackPoint, RackPoint]:
    """``(u,A) |- (v,B) = (Av, AB)`` and ``(u,A) -| (v,B) = (u, AB)``."""
    _invertible(x)
    vd = RackPoint(x.m @ y.v, x.a @ y.a, x.m @ y.m)
    dv = RackPoint(x.v.copy(), x.a @ y.a, x.m @ y.m)
    return vd, dv


def digroup_inverse(x: RackPoint) -> RackPoint:
    """The inverse ``(0, A^-1)``."""
    return x.inverse_group()


def digroup_conjugation(model: LinearLieGroupModel, x: RackPoint, y: RackPoint) -> RackPoint:
    """``x |- y -| x^-1`` evaluated with the digroup operations."""
    vd, _ = digroup_ops(model, x, y)
    _, out = digroup_ops(model, vd, digroup_inverse(x))
    return out


def point_distance(p: RackPoint, q: RackPoint) -> float:
    return max(float(np.max(np.abs(p.v - q.v), initial=0.0)),
               float(np.max(np.abs(p.a - q.a), initial=0.0)),
               float(np.max(np.abs(p.m - q.m), initial=0.0)))


def _tangent_of(model: LinearLieGroupModel, fwd: RackPoint, bwd: RackPoint, h: float) -> np.ndarray:
    dv = (fwd.v - bwd.v) / (2 * h)
    dX = (fwd.a - bwd.a) / (2 * h)
    return np.concatenate([dv, model.coords(dX)])


def big_phi_fd(model: LinearLieGroupModel, x: RackPoint, step: float = STEP_PHI) -> np.ndarray:
    """Tangent map of ``y -> x o y`` at the unit, by central differences.

    Column ``j`` differentiates ``t -> x o (t w, exp(t X))`` for the ``j``-th
    tangent basis direction ``(w, X)``.
    """
    n = model.tangent_dim
    d = model.module_dim
    out = np.zeros((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        fwd = rack_op(model, x, model.point(step * e[:d], step * e[d:]))
        bwd = rack_op(model, x, model.point(-step * e[:d], -step * e[d:]))
        out[:, j] = _tangent_of(model, fwd, bwd, step)
    return out


def big_phi(model: LinearLieGroupModel, x: RackPoint) -> np.ndarray:
    """Closed form ``v + X -> A v + Ad(A) X`` with ``Ad(A) X = A X A^-1``."""
    d, k = model.module_dim, model.lie_dim
    n = d + k
    out = np.zeros((n, n))
    out[:d, :d] = x.m
    ainv = np.linalg.inv(x.a)
    for b in range(k):
        out[d:, d + b] = model.coords(x.a @ model.lie_basis[b] @ ainv)
    return out


@dataclass
class TangentBracket:
    c: np.ndarray
    leibniz_residual: float
    closed_form_error: float

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def algebra(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.c)


def _max_leibniz_residual(c: np.ndarray) -> float:
    return float(np.max(np.abs(leibniz_residual(c)), initial=0.0))


def tangent_bracket(model: LinearLieGroupModel, step_ad: float = STEP_AD,
                    step_phi: float = STEP_PHI) -> TangentBracket:
    """Differentiate ``s -> Phi((s w, exp(s X)))`` at ``s = 0`` for each basis direction.

    ``Phi`` is itself the finite-difference estimate, so the bracket comes
    from nested central differences.  Column ``j`` of ``ad(e_i)`` gives
    ``[e_i, e_j]``.
    """
    rep = model.check()
    if not rep.passed:
        raise AxiomError("model invariants fail", rep)
    n, d = model.tangent_dim, model.module_dim
    c = np.zeros((n, n, n))
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        fwd = big_phi_fd(model, model.point(step_ad * e[:d], step_ad * e[d:]), step_phi)
        bwd = big_phi_fd(model, model.point(-step_ad * e[:d], -step_ad * e[d:]), step_phi)
        ad_i = (fwd - bwd) / (2 * step_ad)
        c[i] = ad_i.T
    err = float(np.max(np.abs(c - model.closed_form_bracket()), initial=0.0))
    return TangentBracket(c, _max_leibniz_residual(c), err)


def phi_automorphism_residual(model: LinearLieGroupModel, x: RackPoint) -> float:
    """``max |Phi(x)[Y,Z] - [Phi(x)Y, Phi(x)Z]|`` over basis ``Y, Z`` for the closed-form bracket."""
    c = model.closed_form_bracket()
    P = big_phi(model, x)
    lhs = np.einsum("kl,ijl->ijk", P, c)
    rhs = np.einsum("ai,bj,abk->ijk", P, P, c)
    return float(np.max(np.abs(lhs - rhs), initial=0.0))


# -- built-in models --------------------------------------------------------------

def so3_model() -> LinearLieGroupModel:
    from .fixtures import so3_matrices

    mats = [np.array(m, dtype=float) for m in so3_matrices()]
    return LinearLieGroupModel(tuple(mats), tuple(mats), 3, name="so3-standard")


def example_2_2_model() -> LinearLieGroupModel:
    e12 = np.array([[0.0, 1.0], [0.0, 0.0]])
    return LinearLieGroupModel((e12,), (e12,), 2, name="ex2.2")


def abelian_trivial_model(k: int = 2, d: int = 2) -> LinearLieGroupModel:
    """``h = R^k`` as diagonal matrices, acting trivially on ``R^d``."""
    basis = []
    for i in range(k):
        m = np.zeros((k, k))
        m[i, i] = 1.0
        basis.append(m)
    return LinearLieGroupModel(tuple(basis), tuple(np.zeros((d, d)) for _ in range(k)), d,
                               ambient=k, name="abelian-trivial")


BUILTIN_MODELS = {
    "so3-standard": so3_model,
    "ex2.2": example_2_2_model,
    "abelian-trivial": abelian_trivial_model,
}


def default_realization(hal: LeibnizAlgebra, rep) -> list[np.ndarray]:
    """Matrices ``diag(ad X, rho_E X, chi_1(X), ..., chi_r(X))`` for a basis of ``h``.

    ``chi_i`` run over a basis of the characters of ``h`` (functionals vanishing
    on ``[h, h]``).  They make the realization faithful whenever the common
    kernel of ``ad`` and ``rho_E`` meets ``[h, h]`` trivially; otherwise
    :class:`AxiomError` is raised and a realization must be supplied.
    """
    k, d = hal.dim, rep.module_dim
    if k == 0:
        return []
    rows = [[hal.c[a, b, i] for i in range(k)] for a in range(k) for b in range(k)]
    derived = Subspace.span(rows, k)
    chars = la.nullspace(derived.matrix()).vectors() if derived.dim else Subspace.full(k).vectors()
    stacked = np.array([[hal.c[a, j, i] for a in range(k)] for j in range(k) for i in range(k)]
                       + [[rep.rho[a][i, j] for a in range(k)] for i in range(d) for j in range(d)]
                       + [list(f) for f in chars], dtype=object).reshape(-1, k)
    if la.rank(stacked) < k:
        raise AxiomError("h has no faithful realization from ad, rho_E and characters; pass `realization`")
    r = len(chars)
    size = k + d + r
    mats = []
    for a in range(k):
        blk = np.zeros((size, size))
        blk[:k, :k] = np.array(hal.c[a], dtype=float).T
        blk[k:k + d, k:k + d] = np.array(rep.rho[a], dtype=float).reshape(d, d)
        for t, f in enumerate(chars):
            blk[k + d + t, k + d + t] = float(f[a])
        mats.append(blk)
    return mats


def model_from_splitting(g: LeibnizAlgebra, e: Subspace, h: Subspace,
                         realization: Sequence | None = None) -> tuple[LinearLieGroupModel, np.ndarray]:
    """Model on ``E x H`` for a splitting ``g = e + h``.

    ``h`` is realised by :func:`default_realization` unless ``realization``
    supplies one matrix per basis vector of ``h``.  Also returns the adapted
    basis (rows: basis of ``e`` then of ``h``).
    """
    hal = restrict(g, h)
    if not is_skew(hal):
        raise AxiomError("complement is not a Lie subalgebra")
    rep = action_on(g, h, e)
    k, d = h.dim, e.dim
    rho = [np.array(r, dtype=float).reshape(d, d) for r in rep.rho]
    if realization is None:
        mats = default_realization(hal, rep)
    else:
        mats = [np.asarray(m, dtype=float) for m in realization]
    try:
        model = LinearLieGroupModel(tuple(mats), tuple(rho), d, ambient=1, name="from-splitting")
    except AxiomError as exc:
        raise AxiomError("h is not faithfully realised by the supplied matrices; pass `realization`") from exc
    rep_chk = model.check()
    if not rep_chk.passed:
        raise AxiomError("realization does not reproduce the bracket of h", rep_chk)
    if k and np.max(np.abs(model.structure_constants - np.array(hal.c, dtype=float))) > TOL_MODEL:
        raise AxiomError("realization does not reproduce the bracket of h")
    basis = np.array([list(v) for v in e.vectors()] + [list(v) for v in h.vectors()], dtype=object)
    return model, basis


def verify_split_rack_roundtrip(g: LeibnizAlgebra, e: Subspace, h: Subspace,
                                realization: Sequence | None = None) -> Report:
    """Build the linear Lie rack for a splitting, differentiate it twice and
    compare with ``g`` written in the adapted basis."""
    model, basis = model_from_splitting(g, e, h, realization)
    target = np.array(in_basis(g, list(basis)).c, dtype=float) if g.dim else np.zeros((0, 0, 0))
    tb = tangent_bracket(model)
    rep = Report("split rack roundtrip")
    err = float(np.max(np.abs(tb.c - target), initial=0.0))
    rep.add("recovered bracket matches g in adapted basis", passed=err < TOL_BRACKET, residual=err)
    rep.add("recovered bracket is Leibniz", passed=tb.leibniz_residual < TOL_BRACKET, residual=tb.leibniz_residual)
    rep.add("recovered bracket matches demisemidirect closed form", passed=tb.closed_form_error < TOL_BRACKET,
            residual=tb.closed_form_error)
    return rep


# -- exp(ad) rack on a Leibniz algebra ---------------------------------------------

def exp_ad_tangent_bracket(g: LeibnizAlgebra, step_ad: float = STEP_AD, step_phi: float = STEP_PHI) -> np.ndarray:
    """Tangent bracket of ``X o Y = exp(ad X) Y`` by nested central differences."""
    from .rack import exp_ad_rack_op

    gf = g.to_float() if g.exact else g
    n = gf.dim

    def phi_fd(x):
        out = np.zeros((n, n))
        for j in range(n):
            e = np.zeros(n)
            e[j] = step_phi
            out[:, j] = (exp_ad_rack_op(gf, x, e, check=False) - exp_ad_rack_op(gf, x, -e, check=False)) / (2 * step_phi)
        return out

    c = np.zeros((n, n, n))
    for i in range(n):
        e = np.zeros(n)
        e[i] = step_ad
        c[i] = ((phi_fd(e) - phi_fd(-e)) / (2 * step_ad)).T
    return c
