"""Idempotent search in endomorphism algebras given as operators on F_p^N.

A nontrivial idempotent is found by factoring the minimal polynomial of a
random endomorphism: two distinct irreducible factors certify that the
algebra is not local, and the Fitting decomposition of ``f(φ)`` for one
factor ``f`` splits the space.  When p exceeds N, the radical is the kernel
of the trace form, so a one-dimensional semisimple quotient certifies
locality immediately.
"""

from __future__ import annotations

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from . import fp


def minimal_polynomial(phi: np.ndarray, v: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of ``phi`` relative to ``v``, high degree first."""
    n = phi.shape[0]
    cols = [v % p]
    for _ in range(n):
        cols.append(fp.matmul(phi, cols[-1][:, None], p)[:, 0])
    k = np.stack(cols, axis=1)
    _, piv = fp.rref(k, p)
    m = len(piv)
    c = fp.solve(k[:, :m], k[:, m], p)
    # x^m - sum c_i x^i
    return [1] + [int((-c[i]) % p) for i in range(m - 1, -1, -1)]


def _poly_lcm(f: list[int], g: list[int], p: int) -> list[int]:
    from sympy.polys.galoistools import gf_lcm
    return [int(x) for x in gf_lcm([ZZ(x) for x in f], [ZZ(x) for x in g], p, ZZ)]


def poly_at(coeffs: list[int], phi: np.ndarray, p: int) -> np.ndarray:
    n = phi.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in coeffs:
        out = fp.matmul(out, phi, p)
        out[np.diag_indices(n)] = (out[np.diag_indices(n)] + c) % p
    return out


def fitting_projection(psi: np.ndarray, p: int) -> np.ndarray | None:
    """Projection onto the Fitting one-component of ``psi`` along its nilpotent part."""
    n = psi.shape[0]
    big = fp.matpow(psi, n, p)
    img = fp.column_basis(big, p)
    ker = fp.nullspace(big, p)
    if img.shape[1] == 0 or ker.shape[1] == 0:
        return None
    basis = np.concatenate([img, ker], axis=1)
    diag = np.zeros(n, dtype=np.int64)
    diag[: img.shape[1]] = 1
    return fp.matmul(fp.matmul(basis, np.diag(diag), p), fp.inverse(basis, p), p)


def semisimple_rank(ops: np.ndarray, p: int) -> int | None:
    """Dimension of End/rad via the trace form; None when p is too small for the criterion."""
    d, n, _ = ops.shape
    if p <= n:
        return None
    a = ops.reshape(d, n * n)
    b = np.transpose(ops, (0, 2, 1)).reshape(d, n * n)
    gram = fp.matmul(a, b.T, p)
    return fp.rank(gram, p)


def find_idempotent(ops: np.ndarray, p: int, rng: np.random.Generator,
                    attempts: int = 64) -> tuple[np.ndarray | None, bool]:
    """Search for a nontrivial idempotent in the span of ``ops``.

    Returns ``(E, certified_local)``.  ``E`` is None when no splitting was
    found; ``certified_local`` is True when locality was proven rather than
    inferred from exhausted attempts.
    """
    d = ops.shape[0]
    n = ops.shape[1]
    if n == 0 or d <= 1:
        return None, True
    ss = semisimple_rank(ops, p)
    if ss == 1:
        return None, True
    for _ in range(attempts):
        coeffs = rng.integers(0, p, size=d)
        phi = np.tensordot(coeffs, ops, axes=1) % p
        m = minimal_polynomial(phi, rng.integers(0, p, size=n), p)
        m = _poly_lcm(m, minimal_polynomial(phi, rng.integers(0, p, size=n), p), p)
        _, factors = gf_factor([ZZ(x) for x in m], p, ZZ)
        if len(factors) < 2:
            continue
        f, mult = factors[0]
        psi = poly_at([int(x) for x in f], phi, p)
        e = fitting_projection(psi, p)
        if e is not None:
            return e, False
    return None, False


def residue_field_degree(ops: np.ndarray, p: int, rng: np.random.Generator,
                         attempts: int = 8) -> int | None:
    """Degree r when the span of ``ops`` modulo its radical looks like the field F_{p^r}.

    Needs the trace-form criterion (p > N).  A random element of F_{p^r} has an
    irreducible minimal polynomial of degree r with high probability; we
    require that the radical of its minimal polynomial is a single irreducible
    factor whose degree matches the semisimple rank.
    """
    d, n = ops.shape[0], ops.shape[1]
    r = semisimple_rank(ops, p)
    if r is None or r <= 1:
        return None
    for _ in range(attempts):
        phi = np.tensordot(rng.integers(0, p, size=d), ops, axes=1) % p
        m = minimal_polynomial(phi, rng.integers(0, p, size=n), p)
        m = _poly_lcm(m, minimal_polynomial(phi, rng.integers(0, p, size=n), p), p)
        _, factors = gf_factor([ZZ(x) for x in m], p, ZZ)
        if len(factors) != 1:
            return None
        if len(factors[0][0]) - 1 == r:
            return r
    return None
