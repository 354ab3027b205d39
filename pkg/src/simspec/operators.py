"""Operators indexed by the simplices of a complex.

Every matrix here is an int64 numpy array in the canonical simplex order of
its complex. Entries are small (bounded by the number of simplices), so
int64 arithmetic on them is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import Complex, Simplex, euler_characteristic
from .errors import NeedsRefinementContext, NotOneDimensional, YNotDefined
from .linalg import inverse_exact
from .report import VerificationReport, timed


def omega_vector(K: Complex) -> np.ndarray:
    return np.array(K.omegas, dtype=np.int64)


def connection_matrix(K: Complex) -> np.ndarray:
    """L(x, y) = 1 if x and y share a vertex."""
    verts = sorted({v for s in K for v in s.vertices})
    col = {v: i for i, v in enumerate(verts)}
    B = np.zeros((len(K), len(verts)), dtype=np.int64)
    for i, s in enumerate(K):
        for v in s.vertices:
            B[i, col[v]] = 1
    return (B @ B.T > 0).astype(np.int64)


def star_chi_table(K: Complex) -> dict[Simplex, int]:
    """chi(St(x)) for every x: sum of omega over the simplices containing x."""
    table = dict.fromkeys(K.simplices, 0)
    for z in K:
        w = z.omega
        for f in z.faces():
            table[f] += w
    return table


def star_intersection_chi(K: Complex) -> np.ndarray:
    """h(x, y) = chi(St(x) & St(y)).

    St(x) & St(y) is the star of the union of x and y when that union is a
    simplex of K, and empty otherwise.
    """
    table = star_chi_table(K)
    n = len(K)
    h = np.zeros((n, n), dtype=np.int64)
    simp = K.simplices
    for i in range(n):
        xs = set(simp[i].vertices)
        for j in range(i, n):
            u = Simplex(tuple(sorted(xs.union(simp[j].vertices))))
            val = table.get(u, 0)
            h[i, j] = h[j, i] = val
    return h


def green_star_matrix(K: Complex) -> np.ndarray:
    """g(x, y) = omega(x) omega(y) chi(St(x) & St(y))."""
    w = omega_vector(K)
    return w[:, None] * star_intersection_chi(K) * w[None, :]


def green_inverse(K: Complex) -> np.ndarray:
    """g as the exact inverse of L; raises if an entry is not an integer."""
    inv = inverse_exact(connection_matrix(K))
    return np.array(inv.tolist(), dtype=np.int64)


def exterior_derivative(K: Complex) -> np.ndarray:
    """Signed incidence d(a, b) for b a facet of a.

    The sign is Signature(a) * Signature((z,) + b) with z = a - b; a is stored
    ascending, so this is (-1)**j for z at position j of a.
    """
    n = len(K)
    d = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(K):
        if len(a) < 2:
            continue
        vs = a.vertices
        for j in range(len(vs)):
            b = Simplex(vs[:j] + vs[j + 1:])
            d[i, K.index[b]] = -1 if j % 2 else 1
    return d


def dirac_and_hodge(K: Complex):
    """(D, H, blocks) with D = d + d^T, H = D^2 and H_k its diagonal blocks."""
    d = exterior_derivative(K)
    D = d + d.T
    H = D @ D
    blocks = [H[np.ix_(r, r)] for r in K.dimension_ranges()]
    return D, H, blocks


def hydrogen_matrix(K: Complex) -> np.ndarray:
    """L - g."""
    return connection_matrix(K) - green_star_matrix(K)


def hydrogen_conjugator(K: Complex) -> np.ndarray:
    """Diagonal R with R (L - g) R = H on refined graphs.

    Refined vertices get (-1)**len(origin simplex), refined edges get 1.
    """
    if K.origin is None:
        raise NeedsRefinementContext("R is defined only on a Barycentric refinement")
    r = np.ones(len(K), dtype=np.int64)
    for i, s in enumerate(K):
        if len(s) == 1:
            r[i] = -1 if len(K.origin[s.vertices[0] - 1]) % 2 else 1
    return np.diag(r)


@dataclass(frozen=True)
class WuOperators:
    M: np.ndarray
    h: np.ndarray
    Y: np.ndarray | None


def y_operator(K: Complex, LmG: np.ndarray | None = None) -> np.ndarray:
    """Real form of U (L - g) U with U = diag(sqrt(omega)).

    Only defined when L - g has no entries between simplices of different
    parity; then Y is L - g on even simplices and -(L - g) on odd ones.
    """
    if LmG is None:
        LmG = hydrogen_matrix(K)
    w = omega_vector(K)
    cross = (w[:, None] != w[None, :]) & (LmG != 0)
    if cross.any():
        i, j = (int(v) for v in np.argwhere(cross)[0])
        raise YNotDefined(
            f"L - g couples {K[i]!r} and {K[j]!r} of different parity ({LmG[i, j]})"
        )
    return LmG * w[:, None]


def wu_matrix(K: Complex) -> WuOperators:
    """M = diag(omega) L diag(omega), h = chi(St & St), and Y when defined."""
    w = omega_vector(K)
    L = connection_matrix(K)
    h = star_intersection_chi(K)
    try:
        Y = y_operator(K, L - w[:, None] * h * w[None, :])
    except YNotDefined:
        Y = None
    return WuOperators(M=w[:, None] * L * w[None, :], h=h, Y=Y)


def operator(K: Complex, kind: str) -> np.ndarray:
    """Operator by name: L, g, D, H, H0..Hr, LmG, M, Y, h, R, d."""
    if kind == "L":
        return connection_matrix(K)
    if kind == "g":
        return green_star_matrix(K)
    if kind == "d":
        return exterior_derivative(K)
    if kind in ("D", "H") or (kind.startswith("H") and kind[1:].isdigit()):
        D, H, blocks = dirac_and_hodge(K)
        if kind == "D":
            return D
        if kind == "H":
            return H
        k = int(kind[1:])
        if k >= len(blocks):
            raise ValueError(f"complex has no {k}-simplices")
        return blocks[k]
    if kind == "LmG":
        return hydrogen_matrix(K)
    if kind == "M":
        return wu_matrix(K).M
    if kind == "h":
        return star_intersection_chi(K)
    if kind == "Y":
        return y_operator(K)
    if kind == "R":
        return hydrogen_conjugator(K)
    raise ValueError(f"unknown operator kind {kind!r}")


def first_mismatch(expected: np.ndarray, actual: np.ndarray):
    """Witness dict for the first differing entry, or None."""
    diff = np.argwhere(np.asarray(expected) != np.asarray(actual))
    if diff.size == 0:
        return None
    i, j = (int(v) for v in diff[0])
    return {"index": [i, j], "expected": int(expected[i, j]), "actual": int(actual[i, j])}


def gauss_bonnet_check(K: Complex) -> VerificationReport:
    """Star sums over z ~ x: 0 off the diagonal, omega(x) on it."""
    with timed() as clock:
        w = omega_vector(K)
        L = connection_matrix(K)
        C = star_intersection_chi(K)
        sums = (L * w[None, :]) @ C
        expected = np.diag(w)
        witness = first_mismatch(expected, sums)
    return VerificationReport("gauss-bonnet", witness is None, witness, clock.elapsed)


def green_lemma_check(K: Complex) -> VerificationReport:
    """Four-case description of g on a refined graph.

    a) different dimension, disjoint: 0; b) different dimension, nested: 1;
    c) adjacent vertices: -1; d) two edges: 0. Diagonal: 1 - chi(S(x)).
    """
    if K.dim > 1:
        raise NotOneDimensional("the four-case lemma is about graphs")
    with timed() as clock:
        g = green_star_matrix(K)
        witness = None
        for i, x in enumerate(K):
            for j, y in enumerate(K):
                if i == j:
                    want = 1 - _sphere_chi_1d(K, x)
                elif len(x) != len(y):
                    want = 1 if x.issubset(y) or y.issubset(x) else 0
                elif len(x) == 1:
                    want = -1 if Simplex.of(x.vertices + y.vertices) in K else 0
                else:
                    want = 0
                if g[i, j] != want:
                    witness = {"index": [i, j], "expected": want, "actual": int(g[i, j])}
                    break
            if witness:
                break
    return VerificationReport("green-lemma", witness is None, witness, clock.elapsed)


def _sphere_chi_1d(K: Complex, x: Simplex) -> int:
    # in a graph the unit sphere is a discrete set of neighbours
    if len(x) == 2:
        return 2
    v = x.vertices[0]
    return sum(1 for e in K.edges if v in e.vertices)


def euler_from_green(K: Complex) -> int:
    return int(green_star_matrix(K).sum())


__all__ = [
    "connection_matrix",
    "dirac_and_hodge",
    "euler_characteristic",
    "exterior_derivative",
    "gauss_bonnet_check",
    "green_inverse",
    "green_lemma_check",
    "green_star_matrix",
    "hydrogen_conjugator",
    "hydrogen_matrix",
    "operator",
    "star_intersection_chi",
    "wu_matrix",
    "y_operator",
]
