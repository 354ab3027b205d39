"""Characteristic polynomials by Hessenberg reduction modulo many primes.

All primes are reduced simultaneously as one ``(P, n, n)`` int64 stack and
the coefficients are recovered by Chinese remaindering against a Hadamard
type bound, so the result is exact. Primes stay below 2**26 so that dot
products of length < 2048 cannot overflow int64.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, isqrt

import numpy as np

PRIME_BITS = 26
_CHUNK = 1024


@lru_cache(maxsize=None)
def primes_below(limit: int, count: int) -> tuple[int, ...]:
    """The ``count`` largest primes below ``limit`` (trial division)."""
    out = []
    cand = limit - 1 if limit % 2 == 0 else limit - 2
    while len(out) < count:
        if _is_prime(cand):
            out.append(cand)
        cand -= 2
    return tuple(out)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def coefficient_bound(A: np.ndarray) -> int:
    """Bound on |c_k| for every coefficient of det(xI - A).

    c_k is a sum of C(n, k) principal k-minors, each bounded by the product
    of the k largest row norms (Hadamard).
    """
    n = A.shape[0]
    norms = sorted(
        (isqrt(sum(int(v) * int(v) for v in row)) + 1 for row in A),
        reverse=True,
    )
    best, prod = 1, 1
    for k in range(1, n + 1):
        prod *= norms[k - 1]
        best = max(best, comb(n, k) * prod)
    return best


def _dot_mod(a: np.ndarray, b: np.ndarray, p: np.ndarray, subscripts: str) -> np.ndarray:
    """einsum over the shared last axis, reduced mod p in int64-safe chunks."""
    k = a.shape[-1]
    acc = None
    for s in range(0, k, _CHUNK):
        part = np.einsum(subscripts, a[..., s:s + _CHUNK], b[..., s:s + _CHUNK]) % p
        acc = part if acc is None else (acc + part) % p
    return acc


def _hessenberg_charpoly(stack: np.ndarray, primes: np.ndarray) -> np.ndarray:
    """Charpoly coefficients mod each prime; returns shape (P, n + 1)."""
    H = stack.copy()
    P, n, _ = H.shape
    pr = primes.reshape(P, 1, 1)
    pv = primes.reshape(P, 1)
    idx = np.arange(P)
    for m in range(1, n - 1):
        col = H[:, m:, m - 1]
        nonzero = col != 0
        has = nonzero.any(axis=1)
        piv = m + np.argmax(nonzero, axis=1)
        piv[~has] = m
        rows_m = H[idx, m, :].copy()
        H[idx, m, :] = H[idx, piv, :]
        H[idx, piv, :] = rows_m
        cols_m = H[idx, :, m].copy()
        H[idx, :, m] = H[idx, :, piv]
        H[idx, :, piv] = cols_m
        t = H[:, m, m - 1]
        inv = np.array(
            [pow(int(v), -1, int(p)) if v else 0 for v, p in zip(t, primes)],
            dtype=np.int64,
        )
        u = (H[:, m + 1:, m - 1] * inv[:, None]) % pv
        if not u.any():
            continue
        # rows j > m: row_j -= u_j * row_m
        H[:, m + 1:, :] = (H[:, m + 1:, :] - (u[:, :, None] * H[:, m, None, :]) % pr) % pr
        # column m += sum_j u_j * col_j
        H[:, :, m] = (H[:, :, m] + _dot_mod(H[:, :, m + 1:], u, pv, "pik,pk->pi")) % pv

    # p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}
    # polys[k] holds p_k with coefficient of x^d at position d
    polys = np.zeros((P, n + 1, n + 1), dtype=np.int64)
    polys[:, 0, 0] = 1
    for k in range(1, n + 1):
        c = k - 1
        prev = polys[:, k - 1, :]
        shifted = np.zeros_like(prev)
        shifted[:, 1:] = prev[:, :-1]
        new = (shifted - (H[:, c, c, None] * prev) % pv) % pv
        t = np.ones(P, dtype=np.int64)
        weights = np.zeros((P, k - 1), dtype=np.int64) if k > 1 else None
        for i in range(c - 1, -1, -1):
            t = (t * H[:, i + 1, i]) % primes
            weights[:, i] = (t * H[:, i, c]) % primes
        if k > 1:
            new = (new - _dot_mod(weights, polys[:, :k - 1, :].transpose(0, 2, 1), pv, "pi,pdi->pd")) % pv
        polys[:, k, :] = new
    return polys[:, n, :]


def charpoly_multimodular(A: np.ndarray) -> list[int]:
    """Exact coefficients of det(xI - A), highest degree first."""
    n = A.shape[0]
    if n == 0:
        return [1]
    used = _enough_primes(2 * coefficient_bound(A) + 1)
    modulus = 1
    for p in used:
        modulus *= p
    primes = np.array(used, dtype=np.int64)
    stack = np.empty((len(used), n, n), dtype=np.int64)
    for s, p in enumerate(used):
        stack[s] = np.array([[int(v) % p for v in row] for row in A], dtype=np.int64)
    residues = _hessenberg_charpoly(stack, primes)
    coeffs = []
    for d in range(n, -1, -1):
        coeffs.append(_crt([int(r) for r in residues[:, d]], used, modulus))
    return coeffs


def _enough_primes(need: int) -> list[int]:
    count = 16
    while True:
        used, modulus = [], 1
        for p in primes_below(1 << PRIME_BITS, count):
            used.append(p)
            modulus *= p
            if modulus > need:
                return used
        count *= 2


def _crt(residues: list[int], primes: list[int], modulus: int) -> int:
    x = 0
    for r, p in zip(residues, primes):
        q = modulus // p
        x += r * q * pow(q, -1, p)
    x %= modulus
    return x - modulus if x > modulus // 2 else x
