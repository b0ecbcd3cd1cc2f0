"""Dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries in [0, p).  All routines
return fresh arrays and never mutate their inputs.
"""

from __future__ import annotations

import numpy as np

_FLOAT_EXACT = 2**53


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(int(a), p - 2, p)


def asmat(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p; uses float BLAS when partial sums stay below 2**53."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = a.shape[-1]
    if k == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    if k * (p - 1) ** 2 < _FLOAT_EXACT:
        out = np.matmul(a.astype(np.float64), b.astype(np.float64))
        return np.rint(out).astype(np.int64) % p
    # chunk the inner dimension so partial sums stay exact
    step = max(1, _FLOAT_EXACT // ((p - 1) ** 2) - 1)
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for s in range(0, k, step):
        part = np.matmul(a[..., s:s + step].astype(np.float64),
                         b[s:s + step].astype(np.float64))
        out = (out + np.rint(part).astype(np.int64)) % p
    return out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = asmat(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * inv(int(m[r, c]), p)) % p
        col = m[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            m[others] = (m[others] - np.outer(col[others], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : a x = 0}."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(piv):
            basis[pc, k] = (-r[i, f]) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of {y : y a = 0}."""
    return nullspace(np.asarray(a).T, p).T


def column_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Independent columns of ``a`` spanning its column space."""
    a = asmat(a, p)
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.int64)
    _, piv = rref(a, p)
    return a[:, piv]


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of a x = b (b may be a matrix), or None."""
    a = asmat(a, p)
    b = asmat(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    n = a.shape[1]
    aug = np.concatenate([a, b], axis=1)
    r, piv = rref(aug, p)
    if any(c >= n for c in piv):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x[:, 0] if vec else x


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    a = asmat(a, p)
    n = a.shape[0]
    x = solve(a, np.eye(n, dtype=np.int64), p)
    if x is None or a.shape[1] != n:
        raise ValueError("matrix is singular mod %d" % p)
    return x


def complement_rows(sub: np.ndarray, n: int, p: int) -> np.ndarray:
    """Unit vectors completing the row space of ``sub`` to F_p^n."""
    sub = asmat(sub, p)
    if sub.size == 0:
        return np.eye(n, dtype=np.int64)
    sub = sub.reshape(-1, n)
    if sub.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    _, piv = rref(sub, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
    return out


def span_contains(basis_cols: np.ndarray, vecs: np.ndarray, p: int) -> bool:
    """True if every column of ``vecs`` lies in the column span of ``basis_cols``."""
    if vecs.size == 0:
        return True
    if basis_cols.size == 0:
        return not np.any(vecs % p)
    return rank(np.concatenate([basis_cols, vecs], axis=1), p) == rank(basis_cols, p)


def random_matrix(rng: np.random.Generator, shape, p: int) -> np.ndarray:
    return rng.integers(0, p, size=shape, dtype=np.int64)


def matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=np.int64)
    base = asmat(a, p)
    while k:
        if k & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return result
