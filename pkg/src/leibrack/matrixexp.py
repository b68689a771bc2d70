"""Matrix exponential by scaling and squaring of a truncated Taylor series."""
from __future__ import annotations

import math

import numpy as np

_EPS = np.finfo(float).eps


def nilpotency_index(a: np.ndarray) -> int | None:
    """Smallest ``k`` with ``a^k == 0`` exactly, or None if ``a^n != 0``."""
    n = a.shape[0]
    p = np.eye(n)
    for k in range(1, n + 1):
        p = p @ a
        if not np.any(p):
            return k
    return None


def expm(a, max_terms: int = 60) -> np.ndarray:
    """``exp(a)`` for a real or complex square matrix.

    Exactly nilpotent inputs use the finite series.  Otherwise the matrix is
    scaled to 1-norm below 1/2, the Taylor series is summed until terms drop
    below machine precision, and the result is squared back.
    """
    a = np.asarray(a)
    if a.dtype == object:
        a = a.astype(float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expm needs a square matrix")
    n = a.shape[0]
    if n == 0:
        return np.zeros((0, 0))
    k = nilpotency_index(a)
    if k is not None:
        out = np.eye(n, dtype=a.dtype)
        term = np.eye(n, dtype=a.dtype)
        for j in range(1, k):
            term = term @ a / j
            out = out + term
        return out
    norm = np.linalg.norm(a, 1)
    if not np.isfinite(norm):
        raise FloatingPointError("matrix exponential of a non-finite matrix")
    s = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0.5 else 0
    b = a / (2.0**s)
    out = np.eye(n, dtype=b.dtype)
    term = np.eye(n, dtype=b.dtype)
    for j in range(1, max_terms + 1):
        term = term @ b / j
        out = out + term
        if np.linalg.norm(term, 1) <= _EPS * np.linalg.norm(out, 1):
            break
    else:
        raise FloatingPointError("Taylor series for expm did not converge")
    for _ in range(s):
        out = out @ out
    return out
