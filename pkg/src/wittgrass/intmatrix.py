"""Exact integer matrix routines on numpy object arrays.

Everything here is fraction-free: unimodular row/column operations over the
integers, no floating point, no rationals.  Used by the exactness checker to
compute kernels, test membership in column spans, and take ranks over the
integers and over small prime fields.
"""

from __future__ import annotations

import numpy as np


def as_int_matrix(rows) -> np.ndarray:
    """Copy nested sequences (or an array) into a 2-d object array of ints."""
    arr = np.array(rows, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    for v in arr.flat:
        if not isinstance(v, (int, np.integer)):
            raise ValueError("matrix entries must be integers")
    return arr.astype(object)


def _identity(n: int) -> np.ndarray:
    ident = np.zeros((n, n), dtype=object)
    for i in range(n):
        ident[i, i] = 1
    return ident


def _min_abs_position(D, t, m, n):
    best = None
    pos = None
    for i in range(t, m):
        for j in range(t, n):
            v = D[i, j]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                pos = (i, j)
    return pos


def diagonalize(A) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Diagonalize over the integers: returns (U, D, V) with U @ A @ V = D.

    U and V are unimodular; D is diagonal (no divisibility chain is
    enforced).  Diagonal shape suffices for ranks, kernels and membership.
    """
    D = as_int_matrix(A).copy()
    m, n = D.shape
    U = _identity(m)
    V = _identity(n)
    for t in range(min(m, n)):
        pos = _min_abs_position(D, t, m, n)
        if pos is None:
            break
        D[[t, pos[0]], :] = D[[pos[0], t], :]
        U[[t, pos[0]], :] = U[[pos[0], t], :]
        D[:, [t, pos[1]]] = D[:, [pos[1], t]]
        V[:, [t, pos[1]]] = V[:, [pos[1], t]]
        while True:
            if D[t, t] < 0:
                D[t, :] = -D[t, :]
                U[t, :] = -U[t, :]
            pivot = D[t, t]
            # clear the column below the pivot
            dirty = False
            for i in range(t + 1, m):
                q = D[i, t] // pivot
                if q:
                    D[i, :] -= q * D[t, :]
                    U[i, :] -= q * U[t, :]
                if D[i, t]:
                    dirty = True
            if dirty:
                # a remainder is strictly smaller than the pivot; promote it
                i = min((i for i in range(t + 1, m) if D[i, t]),
                        key=lambda i: abs(D[i, t]))
                D[[t, i], :] = D[[i, t], :]
                U[[t, i], :] = U[[i, t], :]
                continue
            # clear the row right of the pivot
            for j in range(t + 1, n):
                q = D[t, j] // pivot
                if q:
                    D[:, j] -= q * D[:, t]
                    V[:, j] -= q * V[:, t]
                if D[t, j]:
                    dirty = True
            if dirty:
                j = min((j for j in range(t + 1, n) if D[t, j]),
                        key=lambda j: abs(D[t, j]))
                D[:, [t, j]] = D[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
                continue
            break
    return U, D, V


def rank(A) -> int:
    """Rank over the rationals (count of nonzero diagonal entries)."""
    _, D, _ = diagonalize(A)
    return sum(1 for t in range(min(D.shape)) if D[t, t] != 0)


def integer_kernel(A) -> np.ndarray:
    """Basis of the integer kernel {x : A x = 0}, one column per basis vector.

    The basis spans a saturated sublattice (it is the full kernel), so every
    rational kernel vector is a rational combination of these columns.
    """
    A = as_int_matrix(A)
    _, D, V = diagonalize(A)
    m, n = D.shape
    free = [j for j in range(n) if j >= m or D[j, j] == 0]
    if not free:
        return np.zeros((n, 0), dtype=object)
    return V[:, free]


def solve_in_span(A, b):
    """An integer x with A x = b, or None when no such x exists."""
    A = as_int_matrix(A)
    U, D, V = diagonalize(A)
    m, n = D.shape
    b = np.array(list(b), dtype=object)
    if b.shape != (m,):
        raise ValueError(f"vector length {b.shape} does not match {m} rows")
    c = U.dot(b)
    y = np.zeros(n, dtype=object)
    for i in range(m):
        diag = D[i, i] if i < n else 0
        if diag == 0:
            if c[i] != 0:
                return None
        elif c[i] % diag != 0:
            return None
        else:
            y[i] = c[i] // diag
    return V.dot(y)


def in_column_span(A, b) -> bool:
    """Whether b is an integer combination of the columns of A."""
    return solve_in_span(A, b) is not None


def rank_mod_p(A, p: int) -> int:
    """Rank over the prime field with p elements, by exact elimination."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    M = [[int(v) % p for v in row] for row in as_int_matrix(A).tolist()]
    m = len(M)
    n = len(M[0]) if m else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][col], -1, p)
        M[r] = [(v * inv) % p for v in M[r]]
        for i in range(m):
            if i != r and M[i][col]:
                f = M[i][col]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r
