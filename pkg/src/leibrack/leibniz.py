"""Finite-dimensional (left) Leibniz algebras given by structure constants.

An algebra is a tensor ``c`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k``.  Exact
algebras hold :class:`~fractions.Fraction` entries in an object array; numeric
algebras hold ``float64``.  The Leibniz identity checked throughout is the
derivation form ``[x,[y,z]] = [[x,y],z] + [y,[x,z]]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import exactla as la
from .exactla import Subspace
from .report import AxiomError, Report

__all__ = [
    "LeibnizAlgebra",
    "LieAlgebra",
    "Representation",
    "Dialgebra",
    "NotLeibnizError",
    "NotIdealError",
    "SplittingError",
    "bracket",
    "ad_matrix",
    "check_leibniz",
    "is_skew",
    "squares_ideal",
    "ker_ad",
    "is_ideal",
    "quotient",
    "find_splitting",
    "demisemidirect",
    "check_representation",
    "check_dialgebra",
    "dialgebra_bracket",
    "d_twist",
    "lie_center",
    "in_basis",
    "restrict",
    "action_on",
    "coordinates",
]

DEFAULT_TOL_AXIOM = 1e-9


class NotLeibnizError(AxiomError):
    pass


class NotIdealError(AxiomError):
    pass


class SplittingError(ValueError):
    """The ideal handed to the splitting search is not squeezed between S and ker(ad)."""


def _as_tensor(c, exact: bool | None) -> np.ndarray:
    arr = np.asarray(c)
    if exact is None:
        exact = arr.dtype == object or np.issubdtype(arr.dtype, np.integer)
    if exact:
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = la.as_rational(v)
        return out
    return np.asarray(arr, dtype=float)


@dataclass(frozen=True, eq=False)
class LeibnizAlgebra:
    """Algebra with bracket ``[e_i, e_j] = sum_k c[i, j, k] e_k``."""

    c: np.ndarray
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        c = _as_tensor(self.c, None)
        n = c.shape[0] if c.ndim == 3 else -1
        if c.shape != (n, n, n):
            raise ValueError(f"structure constants must be n x n x n, got {c.shape}")
        object.__setattr__(self, "c", c)
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i + 1}" for i in range(n)))
        elif len(self.basis_names) != n:
            raise ValueError("basis_names length does not match dimension")
        else:
            object.__setattr__(self, "basis_names", tuple(self.basis_names))

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, basis_names: Sequence[str] = ()) -> "LeibnizAlgebra":
        """Build from ``{(i, j): vector}``; omitted pairs bracket to zero."""
        c = la.zeros(dim, dim, dim)
        for (i, j), val in brackets.items():
            c[i, j] = la.rational_vector(val)
        return cls(c, tuple(basis_names))

    @classmethod
    def zero(cls, dim: int) -> "LeibnizAlgebra":
        return cls(la.zeros(dim, dim, dim))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @property
    def exact(self) -> bool:
        return self.c.dtype == object

    def unit(self, i: int) -> np.ndarray:
        v = la.zeros(self.dim) if self.exact else np.zeros(self.dim)
        v[i] = 1
        return v if not self.exact else la.rational_vector(v)

    def to_float(self) -> "LeibnizAlgebra":
        return type(self)(np.array(self.c, dtype=float), self.basis_names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeibnizAlgebra) or other.dim != self.dim:
            return NotImplemented
        return bool(np.all(self.c == other.c))

    __hash__ = None

    @cached_property
    def _leibniz_report(self) -> Report:
        return check_leibniz(self)

    def __repr__(self) -> str:
        nz = sum(1 for i in range(self.dim) for j in range(self.dim) if any(x != 0 for x in self.c[i, j]))
        return f"{type(self).__name__}(dim={self.dim}, nonzero_brackets={nz})"


class LieAlgebra(LeibnizAlgebra):
    """Skew-symmetric Leibniz algebra; skewness is enforced at construction."""

    def __post_init__(self):
        super().__post_init__()
        if not is_skew(self):
            raise AxiomError("structure constants are not skew-symmetric")


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrices ``rho[i]`` giving the action of basis element ``i`` on the module."""

    module_dim: int
    rho: tuple

    def __post_init__(self):
        mats = []
        for m in self.rho:
            a = np.asarray(m)
            if a.dtype == object or np.issubdtype(a.dtype, np.integer):
                a = la.rational_matrix(a) if a.size else la.zeros(self.module_dim, self.module_dim)
            else:
                a = np.asarray(a, dtype=float)
            if a.shape != (self.module_dim, self.module_dim):
                raise ValueError(f"representation matrix of shape {a.shape}, expected {self.module_dim}-square")
            mats.append(a)
        object.__setattr__(self, "rho", tuple(mats))

    @classmethod
    def trivial(cls, h: LeibnizAlgebra, module_dim: int) -> "Representation":
        return cls(module_dim, tuple(la.zeros(module_dim, module_dim) for _ in range(h.dim)))

    def of(self, x) -> np.ndarray:
        """The matrix representing a general element with coordinates ``x``."""
        out = la.zeros(self.module_dim, self.module_dim) if not self.rho or self.rho[0].dtype == object \
            else np.zeros((self.module_dim, self.module_dim))
        for xi, m in zip(x, self.rho):
            if xi != 0:
                out = out + xi * m
        return out


@dataclass(frozen=True, eq=False)
class Dialgebra:
    """Two bilinear products given by structure tensors ``vdash`` and ``dashv``."""

    vdash: np.ndarray
    dashv: np.ndarray
    basis_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        l = _as_tensor(self.vdash, None)
        r = _as_tensor(self.dashv, None)
        if l.shape != r.shape or l.ndim != 3 or len(set(l.shape)) != 1:
            raise ValueError("both products need n x n x n structure tensors")
        object.__setattr__(self, "vdash", l)
        object.__setattr__(self, "dashv", r)

    @property
    def dim(self) -> int:
        return self.vdash.shape[0]


# -- core operations ---------------------------------------------------------

def _check_len(g: LeibnizAlgebra, *vs) -> None:
    for v in vs:
        if len(v) != g.dim:
            raise ValueError(f"vector of length {len(v)} for algebra of dimension {g.dim}")


def _vec(g: LeibnizAlgebra, x) -> np.ndarray:
    return la.rational_vector(x) if g.exact else np.asarray(x, dtype=float)


def bracket(g: LeibnizAlgebra, x, y) -> np.ndarray:
    """Bilinear extension of the structure constants."""
    _check_len(g, x, y)
    x, y = _vec(g, x), _vec(g, y)
    if not g.exact:
        return np.einsum("i,j,ijk->k", x, y, g.c)
    # exact vectors here are usually sparse; skip zero coordinates
    ix, iy = np.flatnonzero(x), np.flatnonzero(y)
    out = la.zeros(g.dim)
    if len(ix) and len(iy):
        coeff = np.outer(x[ix], y[iy])
        out = out + np.tensordot(coeff, g.c[np.ix_(ix, iy)], axes=([0, 1], [0, 1]))
    return out


def ad_matrix(g: LeibnizAlgebra, x) -> np.ndarray:
    """Matrix of ``y -> [x, y]`` (columns are images of basis vectors)."""
    _check_len(g, x)
    x = _vec(g, x)
    if not g.exact:
        return np.einsum("i,ijk->kj", x, g.c)
    ix = np.flatnonzero(x)
    if not len(ix):
        return la.zeros(g.dim, g.dim)
    return np.tensordot(x[ix], g.c[ix], axes=(0, 0)).T


def _integerize(c: np.ndarray) -> np.ndarray:
    """Scale a rational tensor to integers; returns an int64 array when safe."""
    den = 1
    for v in c.flat:
        den = math.lcm(den, Fraction(v).denominator)
    ints = np.empty(c.shape, dtype=object)
    for idx, v in np.ndenumerate(c):
        ints[idx] = int(Fraction(v) * den)
    bound = max((abs(v) for v in ints.flat), default=0)
    n = c.shape[0] if c.ndim else 1
    if bound and bound * bound * n * 3 >= 2**62:
        return ints
    return ints.astype(np.int64)


def _products(p: np.ndarray, q: np.ndarray, spec: str) -> np.ndarray:
    return np.einsum(spec, p, q)


def _triple_report(name: str, residual: np.ndarray, exact: bool, tol: float, report: Report,
                   scale: int = 1) -> None:
    """Record every basis triple whose residual vector is nonzero (or above tol)."""
    n = residual.shape[0]
    if exact:
        bad = np.argwhere(np.any(residual != 0, axis=-1))
        wit = []
        for i, j, k in bad:
            vec = [la.format_rational(Fraction(int(v), scale)) for v in residual[i, j, k]]
            wit.append({"at": [int(i), int(j), int(k)], "residual": vec})
        report.add(name, wit, residual=0.0 if not wit else None)
    else:
        mag = np.max(np.abs(residual), axis=-1) if residual.size else np.zeros((n, n, n))
        bad = np.argwhere(mag > tol)
        wit = [{"at": [int(i), int(j), int(k)], "residual": [float(v) for v in residual[i, j, k]]}
               for i, j, k in bad]
        report.add(name, wit, residual=float(mag.max()) if mag.size else 0.0)


def leibniz_residual(c: np.ndarray) -> np.ndarray:
    """``[x,[y,z]] - [[x,y],z] - [y,[x,z]]`` on all basis triples, shape (n,n,n,n)."""
    lhs = _products(c, c, "yzm,xmk->xyzk")
    r1 = _products(c, c, "xym,mzk->xyzk")
    r2 = _products(c, c, "xzm,ymk->xyzk")
    return lhs - r1 - r2


def check_leibniz(g: LeibnizAlgebra, tol: float = DEFAULT_TOL_AXIOM) -> Report:
    """Check the Leibniz identity on every basis triple ``(i, j, k)``."""
    rep = Report("leibniz")
    if g.exact:
        ic = _integerize(g.c)
        den = 1
        for v in g.c.flat:
            den = math.lcm(den, v.denominator)
        # the residual is quadratic in c
        _triple_report("leibniz identity", leibniz_residual(ic), True, 0.0, rep, scale=den * den)
    else:
        _triple_report("leibniz identity", leibniz_residual(g.c), False, tol, rep)
    return rep


def is_skew(g: LeibnizAlgebra, tol: float = DEFAULT_TOL_AXIOM) -> bool:
    s = g.c + np.transpose(g.c, (1, 0, 2))
    if g.exact:
        return all(v == 0 for v in s.flat)
    return bool(np.all(np.abs(s) <= tol))


def _require_leibniz(g: LeibnizAlgebra) -> None:
    rep = g._leibniz_report if g.exact else check_leibniz(g)
    if not rep.passed:
        raise NotLeibnizError("algebra fails the Leibniz identity", rep)


def _units(n: int) -> list[np.ndarray]:
    return [la.rational_vector([1 if k == i else 0 for k in range(n)]) for i in range(n)]


def squares_ideal(g: LeibnizAlgebra) -> Subspace:
    """The ideal generated by all squares ``[x, x]``.

    Seeded with ``[e_i, e_i]`` and the polarizations ``[e_i, e_j] + [e_j, e_i]``,
    then closed under left and right brackets with basis vectors.
    """
    _require_leibniz(g)
    n = g.dim
    c = g.c
    gens = [c[i, i] for i in range(n)]
    gens += [c[i, j] + c[j, i] for i in range(n) for j in range(i + 1, n)]
    s = Subspace.span(gens, n)
    while True:
        more = list(s.vectors())
        for v in s.vectors():
            for i in range(n):
                more.append(np.einsum("j,jk->k", v, c[i]))      # [e_i, v]
                more.append(np.einsum("i,ik->k", v, c[:, i]))   # [v, e_i]
        grown = Subspace.span(more, n)
        if grown.dim == s.dim:
            return s
        s = grown


def _stacked_ad(g: LeibnizAlgebra) -> np.ndarray:
    # row (j, k), column i holds c[i, j, k]
    n = g.dim
    return np.transpose(g.c, (1, 2, 0)).reshape(n * n, n)


def ker_ad(g: LeibnizAlgebra) -> Subspace:
    """``{x : [x, y] = 0 for all y}``."""
    return la.nullspace(_stacked_ad(g))


def lie_center(h: LeibnizAlgebra) -> Subspace:
    """Center of a Lie algebra."""
    if not is_skew(h):
        raise AxiomError("center requested for a non-skew algebra")
    return ker_ad(h)


def is_ideal(g: LeibnizAlgebra, v: Subspace) -> bool:
    return not _ideal_witnesses(g, v)


def _ideal_witnesses(g: LeibnizAlgebra, v: Subspace) -> list:
    if v.ambient_dim != g.dim:
        raise ValueError("subspace and algebra dimensions differ")
    out = []
    for b_idx, b in enumerate(v.vectors()):
        for i in range(g.dim):
            left = np.einsum("j,jk->k", b, g.c[i])
            right = np.einsum("i,ik->k", b, g.c[:, i])
            if not v.contains(left):
                out.append({"side": "left", "generator": i, "basis_vector": b_idx})
            if not v.contains(right):
                out.append({"side": "right", "generator": i, "basis_vector": b_idx})
    return out


def coordinates(sub: Subspace, v) -> np.ndarray:
    """Coordinates of ``v`` in the echelon basis of ``sub``; raises if ``v`` is outside."""
    v = la.rational_vector(v)
    coords = la.rational_vector([v[p] for p in sub.pivots])
    recon = la.zeros(sub.ambient_dim)
    for a, b in zip(coords, sub.vectors()):
        recon = recon + a * b
    if any(x != 0 for x in recon - v):
        raise ValueError("vector does not lie in the subspace")
    return coords


def _complement_projection(g: LeibnizAlgebra, ideal: Subspace) -> tuple[list[int], np.ndarray]:
    comp = ideal.complement_indices()
    n = g.dim
    cols = list(ideal.vectors()) + [_units(n)[i] for i in comp]
    basis = la.rational_matrix(np.array(cols, dtype=object).T) if cols else la.zeros(0, 0)
    inv = la.inverse(basis)
    return comp, inv[ideal.dim:, :]


def quotient(g: LeibnizAlgebra, ideal: Subspace) -> tuple[LeibnizAlgebra, np.ndarray]:
    """Quotient algebra on a coordinate complement, and the projection matrix."""
    wit = _ideal_witnesses(g, ideal)
    if wit:
        rep = Report("ideal")
        rep.add("two-sided ideal", wit)
        raise NotIdealError("subspace is not a two-sided ideal", rep)
    comp, proj = _complement_projection(g, ideal)
    m = len(comp)
    c = la.zeros(m, m, m)
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            c[a, b] = proj.dot(g.c[i, j])
    names = tuple(g.basis_names[i] for i in comp)
    q = LeibnizAlgebra(c, names)
    if is_skew(q):
        q = LieAlgebra(c, names)
    return q, proj


def find_splitting(g: LeibnizAlgebra, e: Subspace) -> Subspace | None:
    """A Lie subalgebra complementary to ``e``, or None if ``g`` does not split over ``e``.

    With ``e`` inside ker(ad), sections ``x -> c_x + tau(x)`` of the quotient map
    are homomorphisms exactly when ``tau`` solves a linear system, so the search
    is a single exact solve.
    """
    if not is_ideal(g, e):
        raise NotIdealError("splitting requested over a subspace that is not an ideal")
    s = squares_ideal(g)
    k = ker_ad(g)
    lower, upper = s.issubspace(e), e.issubspace(k)
    if not (lower and upper):
        missing = []
        if not lower:
            missing.append("squares ideal S is not contained in E")
        if not upper:
            missing.append("E is not contained in ker(ad)" + (" (only S <= E holds)" if lower else ""))
        raise SplittingError("; ".join(missing))

    n, d = g.dim, e.dim
    comp, proj = _complement_projection(g, e)
    m = len(comp)
    units = _units(n)
    cvecs = [units[i] for i in comp]
    fvecs = e.vectors()
    # [c_a, f_p] for every complement vector and ideal basis vector
    cf = [[bracket(g, ca, fp) for fp in fvecs] for ca in cvecs]

    nunk = m * d
    rows, rhs = [], []
    for a in range(m):
        for b in range(m):
            cab = g.c[comp[a], comp[b]]
            beta = proj.dot(cab)
            eps = cab - sum((beta[k_] * cvecs[k_] for k_ in range(m)), la.zeros(n))
            for r in range(n):
                row = [Fraction(0)] * nunk
                for p in range(d):
                    row[b * d + p] += cf[a][p][r]
                    for k_ in range(m):
                        if beta[k_] != 0:
                            row[k_ * d + p] -= beta[k_] * fvecs[p][r]
                rows.append(row)
                rhs.append(-eps[r])
    if nunk == 0:
        t = la.zeros(0)
        if any(v != 0 for v in rhs):
            return None
    else:
        t = la.solve(la.rational_matrix(rows), rhs)
        if t is None:
            return None
    hvecs = []
    for a in range(m):
        tau = la.zeros(n)
        for p in range(d):
            tau = tau + t[a * d + p] * fvecs[p]
        hvecs.append(cvecs[a] + tau)
    h = Subspace.span(hvecs, n)
    _assert_splitting(g, e, h)
    return h


def _assert_splitting(g: LeibnizAlgebra, e: Subspace, h: Subspace) -> None:
    total, common = la.sum_and_intersection(e, h)
    if total.dim != g.dim or common.dim != 0:
        raise AssertionError("splitting search produced a non-complement")
    for x in h.vectors():
        for y in h.vectors():
            if not h.contains(bracket(g, x, y)):
                raise AssertionError("splitting search produced a non-subalgebra")


def restrict(g: LeibnizAlgebra, sub: Subspace) -> LeibnizAlgebra:
    """Bracket restricted to a subalgebra, in the echelon basis of ``sub``."""
    vecs = sub.vectors()
    m = len(vecs)
    c = la.zeros(m, m, m)
    for a, x in enumerate(vecs):
        for b, y in enumerate(vecs):
            c[a, b] = coordinates(sub, bracket(g, x, y))
    alg = LeibnizAlgebra(c)
    return LieAlgebra(c) if is_skew(alg) else alg


def action_on(g: LeibnizAlgebra, h: Subspace, e: Subspace) -> Representation:
    """Matrices of ``v -> [X, v]`` on ``e`` for the echelon basis vectors ``X`` of ``h``."""
    mats = []
    evecs = e.vectors()
    for x in h.vectors():
        cols = [coordinates(e, bracket(g, x, v)) for v in evecs]
        m = la.rational_matrix(np.array(cols, dtype=object).T) if cols else la.zeros(0, 0)
        mats.append(m if cols else la.zeros(0, 0))
    return Representation(e.dim, tuple(mats))


def in_basis(g: LeibnizAlgebra, vectors: Sequence) -> LeibnizAlgebra:
    """Structure constants with respect to a new basis given as a list of vectors."""
    vecs = [la.rational_vector(v) for v in vectors]
    n = g.dim
    p = la.rational_matrix(np.array(vecs, dtype=object).T)
    pinv = la.inverse(p)
    c = la.zeros(n, n, n)
    for a in range(n):
        for b in range(n):
            c[a, b] = pinv.dot(bracket(g, vecs[a], vecs[b]))
    return LeibnizAlgebra(c)


def check_representation(h: LeibnizAlgebra, rep: Representation, tol: float = DEFAULT_TOL_AXIOM) -> Report:
    """``rho([X_a, X_b]) = [rho(X_a), rho(X_b)]`` on every basis pair."""
    report = Report("representation")
    if len(rep.rho) != h.dim:
        report.add("matrix count", [{"expected": h.dim, "got": len(rep.rho)}])
        return report
    wit = []
    worst = 0.0
    for a in range(h.dim):
        for b in range(h.dim):
            lhs = rep.of(h.c[a, b])
            rhs = rep.rho[a].dot(rep.rho[b]) - rep.rho[b].dot(rep.rho[a])
            diff = lhs - rhs
            if h.exact and diff.dtype == object:
                if any(v != 0 for v in diff.flat):
                    wit.append({"at": [a, b]})
            else:
                r = float(np.max(np.abs(np.asarray(diff, dtype=float)))) if diff.size else 0.0
                worst = max(worst, r)
                if r > tol:
                    wit.append({"at": [a, b], "residual": r})
    report.add("homomorphism", wit, residual=worst)
    return report


def demisemidirect(h: LeibnizAlgebra, rep: Representation) -> LeibnizAlgebra:
    """Leibniz algebra on ``V + h`` with ``[u + X, v + Y] = X v + [X, Y]``.

    Module coordinates come first, then the basis of ``h``.
    """
    if not is_skew(h):
        raise AxiomError("demisemidirect product needs a Lie algebra")
    chk = check_representation(h, rep)
    if not chk.passed:
        raise AxiomError("not a representation", chk)
    d, m = rep.module_dim, h.dim
    n = d + m
    c = la.zeros(n, n, n)
    for a in range(m):
        for b in range(m):
            c[d + a, d + b, d:] = h.c[a, b]
        rho = rep.rho[a]
        for i in range(d):
            c[d + a, i, :d] = rho[:, i]
    names = tuple(f"v{i + 1}" for i in range(d)) + tuple(h.basis_names)
    return LeibnizAlgebra(c, names)


def _dialgebra_residuals(d: Dialgebra) -> tuple[int, dict[str, np.ndarray]]:
    l, r = d.vdash, d.dashv
    den = 1
    if d.vdash.dtype == object:
        den = 1
        for v in list(l.flat) + list(r.flat):
            den = math.lcm(den, v.denominator)
        both = _integerize(np.stack([l * den, r * den]))
        l, r = both[0], both[1]
    e = np.einsum
    return den * den, {
        "associativity (vdash)": e("xym,mzk->xyzk", l, l) - e("yzm,xmk->xyzk", l, l),
        "associativity (dashv)": e("xym,mzk->xyzk", r, r) - e("yzm,xmk->xyzk", r, r),
        "D1": e("yzm,xmk->xyzk", r, l) - e("xym,mzk->xyzk", l, r),
        "D2": e("yzm,xmk->xyzk", l, r) - e("yzm,xmk->xyzk", r, r),
        "D3": e("xym,mzk->xyzk", r, l) - e("xym,mzk->xyzk", l, l),
    }


def check_dialgebra(d: Dialgebra, tol: float = DEFAULT_TOL_AXIOM) -> Report:
    """Associativity of both products and the compatibility axioms D1, D2, D3."""
    rep = Report("dialgebra")
    exact = d.vdash.dtype == object
    scale, residuals = _dialgebra_residuals(d)
    for name, res in residuals.items():
        _triple_report(name, res, exact, tol, rep, scale=scale)
    return rep


def dialgebra_bracket(d: Dialgebra) -> LeibnizAlgebra:
    """Leibniz algebra with ``[x, y] = x |- y - y -| x``."""
    rep = check_dialgebra(d)
    if not rep.passed:
        raise AxiomError("dialgebra axioms fail", rep)
    c = d.vdash - np.transpose(d.dashv, (1, 0, 2))
    return LeibnizAlgebra(c, d.basis_names)


def d_twist(h: LeibnizAlgebra, dmat) -> LeibnizAlgebra:
    """Leibniz algebra with bracket ``[X, Y]_D = [X, D Y]``.

    ``D`` acts on coordinate columns and must be a derivation with ``D^2 = 0``.
    """
    if not is_skew(h):
        raise AxiomError("D-twist needs a Lie algebra")
    dm = la.rational_matrix(dmat) if h.exact else np.asarray(dmat, dtype=float)
    n = h.dim
    if dm.shape != (n, n):
        raise ValueError("D must be a square matrix of the algebra's dimension")
    report = Report("d-twist preconditions")
    units = _units(n)
    der_wit = []
    for a in range(n):
        for b in range(n):
            lhs = dm.dot(h.c[a, b])
            rhs = bracket(h, dm[:, a], units[b]) + bracket(h, units[a], dm[:, b])
            if any(v != 0 for v in lhs - rhs):
                der_wit.append({"at": [a, b]})
    report.add("derivation", der_wit)
    sq = dm.dot(dm)
    report.add("D^2 = 0", [{"at": [int(i), int(j)]} for (i, j), v in np.ndenumerate(sq) if v != 0])
    if not report.passed:
        msgs = []
        if der_wit:
            msgs.append("not a derivation")
        if not report["D^2 = 0"].passed:
            msgs.append("D^2 != 0")
        raise AxiomError("; ".join(msgs), report)
    c = np.einsum("lj,ilk->ijk", dm, h.c)
    return LeibnizAlgebra(c, h.basis_names)


def rebuild_from_splitting(g: LeibnizAlgebra, e: Subspace, h: Subspace) -> tuple[LeibnizAlgebra, LeibnizAlgebra]:
    """``(demisemidirect(h, action of h on e), g in the basis e + h)``.

    For a genuine splitting the two structure tensors coincide exactly.
    """
    rebuilt = demisemidirect(restrict(g, h), action_on(g, h, e))
    adapted = in_basis(g, list(e.vectors()) + list(h.vectors()))
    return rebuilt, adapted
