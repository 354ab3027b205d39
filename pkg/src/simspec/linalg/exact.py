"""Dense exact linear algebra over Python integers and fractions.

Matrices are numpy arrays with ``dtype=object`` holding ``int`` or
``Fraction`` entries; any integer array-like is accepted on input.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from ..errors import NotSymmetric, ShapeError, Singular
from .modular import charpoly_multimodular

FADDEEV_MAX_ORDER = 24


def as_exact(M) -> np.ndarray:
    """Copy ``M`` into an object array of ints (or Fractions where needed)."""
    A = np.array(M, dtype=object)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {A.shape}")
    out = np.empty(A.shape, dtype=object)
    for idx, v in np.ndenumerate(A):
        if isinstance(v, Fraction):
            out[idx] = v.numerator if v.denominator == 1 else v
        elif isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            out[idx] = int(v)
        elif isinstance(v, bool):
            out[idx] = int(v)
        elif isinstance(v, (float, np.floating)) and float(v).is_integer():
            out[idx] = int(v)
        else:
            raise TypeError(f"entry {v!r} at {idx} is not an exact number")
    return out


def _square(M) -> np.ndarray:
    A = as_exact(M)
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"matrix is {A.shape[0]}x{A.shape[1]}, need square")
    return A


def _integral(A: np.ndarray) -> np.ndarray:
    """Scale each row by the lcm of its denominators; rank and kernel are kept."""
    B = np.empty(A.shape, dtype=object)
    for i, row in enumerate(A):
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        B[i] = [int(v * den) for v in row]
    return B


def identity(n: int) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


def is_symmetric(A) -> bool:
    A = np.asarray(A)
    return A.shape[0] == A.shape[1] and bool((A == A.T).all())


def det_bareiss(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _square(M)
    if any(isinstance(v, Fraction) for v in A.flat):
        raise TypeError("det_bareiss needs an integer matrix")
    n = A.shape[0]
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k, k] == 0:
            nz = np.flatnonzero(A[k + 1:, k] != 0)
            if nz.size == 0:
                return 0
            r = k + 1 + nz[0]
            A[[k, r]] = A[[r, k]]
            sign = -sign
        p = A[k, k]
        A[k + 1:, k + 1:] = (A[k + 1:, k + 1:] * p - np.outer(A[k + 1:, k], A[k, k + 1:])) // prev
        A[k + 1:, k] = 0
        prev = p
    return sign * int(A[n - 1, n - 1])


def _echelon(A: np.ndarray, reduce_above: bool = False):
    """In-place fraction-free echelon form; returns pivot (row, col) pairs."""
    m, n = A.shape
    pivots = []
    r, prev = 0, 1
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        p = A[r, c]
        rows = np.r_[0:r, r + 1:m] if reduce_above else np.arange(r + 1, m)
        if rows.size:
            A[rows] = (A[rows] * p - np.outer(A[rows, c], A[r])) // prev
        pivots.append((r, c))
        prev = p
        r += 1
    return pivots


def rank_exact(M) -> int:
    """Rank over the rationals."""
    A = _integral(as_exact(M))
    if A.size == 0:
        return 0
    return len(_echelon(A))


def inverse_exact(M) -> np.ndarray:
    """Exact inverse by fraction-free Gauss-Jordan on ``[M | I]``.

    Entries are returned as ints where integral, Fractions otherwise.
    """
    A = _square(M)
    n = A.shape[0]
    if any(isinstance(v, Fraction) for v in A.flat):
        return _inverse_rational(A)
    aug = np.concatenate([A, identity(n)], axis=1)
    pivots = _echelon(aug, reduce_above=True)
    if len(pivots) < n or any(c >= n for _, c in pivots):
        raise Singular("matrix is singular")
    out = np.empty((n, n), dtype=object)
    for r in range(n):
        d = aug[r, r]
        for j in range(n):
            out[r, j] = _simplify(Fraction(aug[r, n + j], d))
    return out


def _inverse_rational(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    aug = np.concatenate([A, identity(n)], axis=1)
    aug = np.vectorize(Fraction, otypes=[object])(aug)
    for c in range(n):
        nz = np.flatnonzero(aug[c:, c] != 0)
        if nz.size == 0:
            raise Singular("matrix is singular")
        i = c + nz[0]
        if i != c:
            aug[[c, i]] = aug[[i, c]]
        aug[c] = aug[c] / aug[c, c]
        for r in range(n):
            if r != c and aug[r, c] != 0:
                aug[r] = aug[r] - aug[r, c] * aug[c]
    return np.vectorize(_simplify, otypes=[object])(aug[:, n:])


def _simplify(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def kernel_exact(M) -> list[list[int]]:
    """Integer basis of the right kernel, one primitive vector per free column."""
    A = _integral(as_exact(M))
    m, n = A.shape
    pivots = _echelon(A, reduce_above=True)
    pivot_cols = {c: r for r, c in pivots}
    basis = []
    for f in range(n):
        if f in pivot_cols:
            continue
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for c, r in pivot_cols.items():
            x[c] = Fraction(-A[r, f], A[r, c])
        den = 1
        for v in x:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        basis.append([v // g for v in ints])
    return basis


def charpoly_faddeev(M) -> list[int]:
    """Characteristic polynomial by integer Faddeev-LeVerrier, O(n^4)."""
    A = _square(M)
    n = A.shape[0]
    coeffs = [1]
    Mk = np.zeros((n, n), dtype=object)
    I = identity(n)
    c = 1
    for k in range(1, n + 1):
        Mk = A.dot(Mk) + c * I
        AM = A.dot(Mk)
        tr = sum(AM[i, i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = -tr // k
        coeffs.append(int(c))
    return coeffs


def charpoly_exact(M) -> list[int]:
    """Coefficients of det(xI - M), highest degree first (leading 1)."""
    A = _square(M)
    if any(isinstance(v, Fraction) for v in A.flat):
        raise TypeError("charpoly_exact needs an integer matrix")
    if A.shape[0] <= FADDEEV_MAX_ORDER:
        return charpoly_faddeev(A)
    return charpoly_multimodular(A)


def poly_eval(coeffs: list[int], x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def sign_variations(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _require_symmetric(A):
    if not is_symmetric(A):
        raise NotSymmetric("matrix is not symmetric")


def inertia_exact(M) -> tuple[int, int, int]:
    """(p, n, z): counts of positive, negative and zero eigenvalues.

    z comes from the exact rank; p is the number of sign changes in the
    characteristic polynomial, which is exact since the roots are real.
    """
    A = _square(M)
    _require_symmetric(A)
    order = A.shape[0]
    z = order - rank_exact(A)
    p = sign_variations(charpoly_exact(A))
    return p, order - z - p, z


def multiplicity_at(M, lam) -> int:
    """Exact multiplicity of the eigenvalue ``lam`` of a symmetric matrix."""
    A = _square(M)
    _require_symmetric(A)
    lam = Fraction(lam)
    B = A.copy()
    for i in range(A.shape[0]):
        B[i, i] = _simplify(B[i, i] - lam)
    return A.shape[0] - rank_exact(B)
