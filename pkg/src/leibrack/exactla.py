"""Exact linear algebra over the rationals.

Matrices are numpy object arrays holding :class:`fractions.Fraction` entries,
so every operation below is exact. Subspaces are kept in reduced row-echelon
form, which makes equality of subspaces plain structural equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Fraction",
    "as_rational",
    "rational_matrix",
    "rational_vector",
    "zeros",
    "identity",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "Subspace",
    "sum_and_intersection",
    "format_rational",
    "parse_rational",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_matrix(rows) -> np.ndarray:
    a = np.array(rows, dtype=object)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = as_rational(v)
    return out


def rational_vector(values: Iterable) -> np.ndarray:
    vals = [as_rational(v) for v in values]
    out = np.empty(len(vals), dtype=object)
    out[:] = vals
    return out


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns of ``m``."""
    a = rational_matrix(m) if not _is_rational_array(m) else m.copy()
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = [i for i in range(r, nrows) if a[i, c] != 0]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        for i in range(nrows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def _is_rational_array(m) -> bool:
    return (
        isinstance(m, np.ndarray)
        and m.dtype == object
        and all(isinstance(v, Fraction) for v in m.flat)
    )


def rank(m) -> int:
    return len(rref(m)[1])


def nullspace(m) -> "Subspace":
    """The subspace ``{x : m @ x = 0}``."""
    a, pivots = rref(m)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = zeros(ncols)
        x[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            x[pc] = -a[row, f]
        basis.append(x)
    return Subspace.span(basis, ncols)


def solve(a, b) -> np.ndarray | None:
    """Some exact solution of ``a @ x = b``, or None when inconsistent.

    Free variables are set to zero.
    """
    a = rational_matrix(a)
    b = rational_vector(b)
    if a.shape[0] != len(b):
        raise ValueError(f"row count {a.shape[0]} does not match rhs length {len(b)}")
    ncols = a.shape[1]
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1) if a.size or len(b) else zeros(0, ncols + 1)
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = zeros(ncols)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, ncols]
    return x


def inverse(a) -> np.ndarray:
    a = rational_matrix(a)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, pivots = rref(np.concatenate([a, identity(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:].copy()


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` stored by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(rational_vector(v)) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if not rows:
            return cls(ambient_dim, ())
        r, pivots = rref(rational_matrix(rows))
        return cls(ambient_dim, tuple(tuple(r[i]) for i in range(len(pivots))))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(identity(ambient_dim), ambient_dim)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_dim: int) -> "Subspace":
        vecs = []
        for i in indices:
            v = zeros(ambient_dim)
            v[i] = Fraction(1)
            vecs.append(v)
        return cls.span(vecs, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        """Basis vectors as the rows of a ``dim x ambient_dim`` matrix."""
        if not self.basis:
            return zeros(0, self.ambient_dim)
        return rational_matrix(self.basis)

    def vectors(self) -> list[np.ndarray]:
        return [rational_vector(b) for b in self.basis]

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(b) if x != 0) for b in self.basis]

    def contains(self, v) -> bool:
        v = rational_vector(v)
        # reduce against the echelon basis
        for b, p in zip(self.basis, self.pivots):
            if v[p] != 0:
                v = v - v[p] * rational_vector(b)
        return all(x == 0 for x in v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def complement_indices(self) -> list[int]:
        """Coordinate indices whose unit vectors span a complement."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(format_rational(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis=[{rows}])"


def sum_and_intersection(u: Subspace, v: Subspace) -> tuple[Subspace, Subspace]:
    """Return ``(u + v, u & v)`` via the Zassenhaus construction."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")
    n = u.ambient_dim
    rows = [list(b) + list(b) for b in u.basis] + [list(b) + [Fraction(0)] * n for b in v.basis]
    if not rows:
        return Subspace.zero(n), Subspace.zero(n)
    r, pivots = rref(rational_matrix(rows))
    total, common = [], []
    for i, p in enumerate(pivots):
        if p < n:
            total.append(r[i, :n])
        else:
            common.append(r[i, n:])
    return Subspace.span(total, n), Subspace.span(common, n)
