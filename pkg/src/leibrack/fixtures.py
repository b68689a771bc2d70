"""Built-in algebras: the worked examples plus a few standard Lie algebras."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import exactla as la
from .leibniz import (
    Dialgebra,
    LeibnizAlgebra,
    LieAlgebra,
    Representation,
    d_twist,
    demisemidirect,
)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(la.zeros(n, n, n))


def so3() -> LieAlgebra:
    """so(3) with ``[L_x, L_y] = L_z`` and cyclic permutations."""
    c = la.zeros(3, 3, 3)
    for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
        c[i, j, k] = Fraction(1)
        c[j, i, k] = Fraction(-1)
    return LieAlgebra(c, ("Lx", "Ly", "Lz"))


def so3_matrices() -> list[np.ndarray]:
    """Generators ``(L_i)_{jk} = -eps_{ijk}``, the standard representation on R^3."""
    mats = []
    for i in range(3):
        m = la.zeros(3, 3)
        for j in range(3):
            for k in range(3):
                m[j, k] = Fraction(-_levi_civita(i, j, k))
        mats.append(m)
    return mats


def _levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2


def so3_standard() -> Representation:
    return Representation(3, tuple(so3_matrices()))


def gl(n: int) -> LieAlgebra:
    """gl(n) on the matrix units ``E_pq`` in row-major order."""
    dim = n * n
    c = la.zeros(dim, dim, dim)
    idx = lambda p, q: p * n + q  # noqa: E731
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    if q == r:
                        c[idx(p, q), idx(r, s), idx(p, s)] += 1
                    if s == p:
                        c[idx(p, q), idx(r, s), idx(r, q)] -= 1
    names = tuple(f"E{p + 1}{q + 1}" for p in range(n) for q in range(n))
    return LieAlgebra(c, names)


def gl_standard(n: int) -> Representation:
    mats = []
    for p in range(n):
        for q in range(n):
            m = la.zeros(n, n)
            m[p, q] = Fraction(1)
            mats.append(m)
    return Representation(n, tuple(mats))


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra, prefixes=("", "")) -> LieAlgebra:
    n, m = a.dim, b.dim
    c = la.zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = a.c
    c[n:, n:, n:] = b.c
    names = tuple(prefixes[0] + s for s in a.basis_names) + tuple(prefixes[1] + s for s in b.basis_names)
    return LieAlgebra(c, names)


def heisenberg() -> LieAlgebra:
    """Basis ``x, y, z`` with ``[x, y] = z``."""
    c = la.zeros(3, 3, 3)
    c[0, 1, 2] = Fraction(1)
    c[1, 0, 2] = Fraction(-1)
    return LieAlgebra(c, ("x", "y", "z"))


def heisenberg_dtwist() -> LeibnizAlgebra:
    """Heisenberg algebra twisted by ``D: y -> x`` (so ``[y, y]_D = -z``)."""
    d = la.zeros(3, 3)
    d[0, 1] = Fraction(1)
    return d_twist(heisenberg(), d)


def strict_upper_line() -> LieAlgebra:
    """One-dimensional Lie algebra spanned by the 2x2 matrix unit E12."""
    return LieAlgebra(la.zeros(1, 1, 1), ("n",))


def example_2_2() -> LeibnizAlgebra:
    """Demisemidirect product of R^2 with the strictly upper triangular 2x2 matrices.

    Basis ``e1, e2`` for the module and ``e3`` for the generator; the only
    nonzero bracket is ``[e3, e2] = e1``.
    """
    rho = la.zeros(2, 2)
    rho[0, 1] = Fraction(1)
    g = demisemidirect(strict_upper_line(), Representation(2, (rho,)))
    return LeibnizAlgebra(g.c, ("e1", "e2", "e3"))


def example_2_1(n: int = 2) -> LeibnizAlgebra:
    """``V + gl(V) + gl(V)`` with ``[u+X+Y, v+U+W] = Yv + [X,U] + [Y,W]``."""
    glv = gl(n)
    h = direct_sum(glv, glv, ("X", "Y"))
    trivial = [la.zeros(n, n) for _ in range(n * n)]
    rep = Representation(n, tuple(trivial) + gl_standard(n).rho)
    return demisemidirect(h, rep)


def example_2_3(n: int = 2) -> Dialgebra:
    """Dialgebra on ``V + End(V)``: ``(u,X)|-(v,Y) = (Xv, XY)``, ``(u,X)-|(v,Y) = (0, XY)``."""
    dim = n + n * n
    left = la.zeros(dim, dim, dim)
    right = la.zeros(dim, dim, dim)
    E = lambda p, q: n + p * n + q  # noqa: E731
    for p in range(n):
        for q in range(n):
            left[E(p, q), q, p] = Fraction(1)
            for s in range(n):
                left[E(p, q), E(q, s), E(p, s)] = Fraction(1)
                right[E(p, q), E(q, s), E(p, s)] = Fraction(1)
    names = tuple(f"v{i + 1}" for i in range(n)) + tuple(f"E{p + 1}{q + 1}" for p in range(n) for q in range(n))
    return Dialgebra(left, right, names)


def example_2_3_twisted(n: int = 2) -> Dialgebra:
    """The ``V + End(V)`` dialgebra with the right product replaced by ``(u,X)-|(v,Y) = (0, YX)``.

    Both products stay associative, but D1 breaks.
    """
    base = example_2_3(n)
    dim = base.dim
    right = la.zeros(dim, dim, dim)
    E = lambda p, q: n + p * n + q  # noqa: E731
    for p in range(n):
        for q in range(n):
            for s in range(n):
                # E_pq -| E_sp = (0, E_sp E_pq) = E_sq
                right[E(p, q), E(s, p), E(s, q)] = Fraction(1)
    return Dialgebra(base.vdash, right, base.basis_names)


LEIBNIZ_FIXTURES = {
    "ex2.1-n2": lambda: example_2_1(2),
    "ex2.2": example_2_2,
    "heisenberg-dtwist": heisenberg_dtwist,
    "so3-standard": lambda: demisemidirect(so3(), so3_standard()),
    "gl2-standard": lambda: demisemidirect(gl(2), gl_standard(2)),
    "so3": so3,
    "heisenberg": heisenberg,
}
