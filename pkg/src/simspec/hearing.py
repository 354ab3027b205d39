"""Betti numbers and Euler characteristic recovered from spectra."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .complex import (
    Complex,
    components_and_cycles,
    euler_characteristic,
    generate,
    random_complex,
    refine,
)
from .errors import (
    BadParameter,
    NeedsRefinement,
    NotKirchhoff,
    NotOneDimensional,
    NotOneDimHodge,
)
from .linalg import (
    SpectralSummary,
    charpoly_exact,
    eig_symmetric,
    inertia_exact,
    jacobi_eigenvalues,
    kernel_exact,
    multiplicity_at,
    rank_exact,
)
from .operators import (
    connection_matrix,
    dirac_and_hodge,
    first_mismatch,
    green_star_matrix,
    hydrogen_conjugator,
)
from .prng import SplitMix64
from .report import VerificationReport, timed

METHODS = ("hodge", "kirchhoff", "hodge-spectrum", "connection", "combinatorial")

# equal connection spectra, different Betti numbers
ISOSPECTRAL_TREE = [[1, 2], [1, 3], [2, 6], [2, 7], [6, 8], [7, 4], [4, 5]]
ISOSPECTRAL_LOOP = [[1, 2], [1, 5], [1, 7], [2, 8], [5, 6], [8, 6], [3, 4]]


@dataclass(frozen=True)
class BettiVector:
    b: tuple[int, ...]
    method: str

    @property
    def chi(self) -> int:
        return sum((-1) ** k * bk for k, bk in enumerate(self.b))

    def to_dict(self) -> dict:
        return {"method": self.method, "betti": list(self.b)}


def _require_1d(K: Complex):
    if K.dim > 1:
        raise NotOneDimensional(f"complex has dimension {K.dim}, need <= 1")


def _require_refined_graph(K: Complex):
    if K.origin is None or K.parent is None:
        raise NeedsRefinement("needs a Barycentric refinement (no origin metadata)")
    if K.parent.dim > 1:
        raise NeedsRefinement("needs the refinement of a one-dimensional complex")


def betti_hodge(K: Complex) -> BettiVector:
    """b_k = nullity of the k-form Laplacian block."""
    _, _, blocks = dirac_and_hodge(K)
    return BettiVector(tuple(B.shape[0] - rank_exact(B) for B in blocks), "hodge")


def betti_from_kirchhoff(H0) -> BettiVector:
    """(b0, b1) from a Kirchhoff matrix: nullity, order and trace only."""
    H0 = np.asarray(H0)
    if H0.ndim != 2 or H0.shape[0] != H0.shape[1]:
        raise NotKirchhoff("Kirchhoff matrix must be square")
    if (H0 != H0.T).any() or H0.sum(axis=1).any():
        raise NotKirchhoff("Kirchhoff matrix must be symmetric with zero row sums")
    order = H0.shape[0]
    b0 = order - rank_exact(H0)
    edges = int(np.trace(H0)) // 2
    return BettiVector((b0, b0 - order + edges), "kirchhoff")


def betti_from_hodge_spectrum(summary: SpectralSummary, order: int, trace: int) -> BettiVector:
    """(b0, b1) from the full Hodge spectrum of a graph.

    tr(H) = 4|E|, order = |V| + |E|, nullity = b0 + b1, chi = |V| - |E|.
    """
    if trace % 4:
        raise NotOneDimHodge(f"trace {trace} is not divisible by 4")
    edges = trace // 4
    verts = order - edges
    chi = verts - edges
    null = summary.nullity
    if (null + chi) % 2 or null < abs(chi):
        raise NotOneDimHodge("spectral data inconsistent with a graph")
    return BettiVector(((null + chi) // 2, (null - chi) // 2), "hodge-spectrum")


def betti_from_connection(K: Complex) -> BettiVector:
    """b0 = mult of eigenvalue 1 of L, b1 = mult of eigenvalue -1 (refined graphs)."""
    _require_refined_graph(K)
    L = connection_matrix(K)
    return BettiVector((multiplicity_at(L, 1), multiplicity_at(L, -1)), "connection")


def betti_combinatorial(K: Complex) -> BettiVector:
    return BettiVector(components_and_cycles(K), "combinatorial")


def betti(K: Complex, method: str) -> BettiVector:
    if method == "hodge":
        return betti_hodge(K)
    if method == "combinatorial":
        return betti_combinatorial(K)
    if method == "connection":
        return betti_from_connection(K)
    _require_1d(K)
    _, H, blocks = dirac_and_hodge(K)
    if method == "kirchhoff":
        return betti_from_kirchhoff(blocks[0])
    if method == "hodge-spectrum":
        return betti_from_hodge_spectrum(eig_symmetric(H), H.shape[0], int(np.trace(H)))
    raise ValueError(f"unknown Betti method {method!r}")


def chi_from_inertia(K: Complex) -> VerificationReport:
    with timed() as clock:
        p, n, z = inertia_exact(connection_matrix(K))
        chi = euler_characteristic(K)
        ok = p - n == chi
    witness = None if ok else {"expected": chi, "actual": p - n}
    return VerificationReport(
        "chi-inertia", ok, witness, clock.elapsed, {"p": p, "n": n, "z": z, "chi": chi}
    )


def _multiset_close(a, b, tol: float) -> float | None:
    """Largest gap between sorted multisets, or None if the sizes differ."""
    a, b = np.sort(np.asarray(a)), np.sort(np.asarray(b))
    if a.shape != b.shape:
        return None
    return float(np.abs(a - b).max()) if a.size else 0.0


def verify_hydrogen(K: Complex, tol: float = 1e-8) -> VerificationReport:
    """R (L - g) R == H exactly, and sigma(H) = {x - 1/x : x in sigma(L)}."""
    _require_refined_graph(K)
    with timed() as clock:
        L = connection_matrix(K)
        g = green_star_matrix(K)
        _, H, _ = dirac_and_hodge(K)
        R = hydrogen_conjugator(K)
        diff = R @ (L - g) @ R - H
        max_abs = int(np.abs(diff).max()) if diff.size else 0
        witness = first_mismatch(H, R @ (L - g) @ R)
        lam = jacobi_eigenvalues(L)
        gap = _multiset_close(lam - 1.0 / lam, jacobi_eigenvalues(H), tol)
        if witness is None and (gap is None or gap > tol):
            witness = {"spectral-gap": gap}
    return VerificationReport(
        "hydrogen",
        witness is None,
        witness,
        clock.elapsed,
        {"max-abs-diff": max_abs, "spectrum-match": gap is not None and gap <= tol, "tol": tol},
    )


def _sectors(K: Complex) -> tuple[set[int], set[int]]:
    verts = {i for i, s in enumerate(K) if len(s) == 1}
    return verts, set(range(len(K))) - verts


def eigenvector_support_check(K: Complex) -> VerificationReport:
    """Kernels of L - I and L + I live on the vertex and edge sectors of the graph.

    ker(L - I) has one {-1, 1}-coloring per component on the vertex
    coordinates; ker(L + I) has dimension b1 and sits on the edge coordinates.
    """
    _require_refined_graph(K)
    with timed() as clock:
        L = connection_matrix(K)
        n = len(K)
        I = np.eye(n, dtype=np.int64)
        plus = kernel_exact(L - I)
        minus = kernel_exact(L + I)
        vert, edge = _sectors(K)
        b0, b1 = components_and_cycles(K)
        witness = None
        if len(plus) != b0:
            witness = {"kernel": "L-I", "expected-dim": b0, "actual-dim": len(plus)}
        elif len(minus) != b1:
            witness = {"kernel": "L+I", "expected-dim": b1, "actual-dim": len(minus)}
        else:
            for name, basis, allowed in (("L-I", plus, vert), ("L+I", minus, edge)):
                for k, v in enumerate(basis):
                    support = {i for i, x in enumerate(v) if x}
                    if not support <= allowed:
                        witness = {"kernel": name, "vector": k, "off-sector": sorted(support - allowed)}
                        break
                    if name == "L-I" and any(abs(v[i]) != 1 for i in support):
                        witness = {"kernel": name, "vector": k, "reason": "not a +-1 coloring"}
                        break
                if witness:
                    break
    return VerificationReport(
        "support",
        witness is None,
        witness,
        clock.elapsed,
        {"dim-ker-L-I": len(plus), "dim-ker-L+I": len(minus)},
    )


def spectral_bounds_check(K: Complex) -> VerificationReport:
    """rho(H) <= (d_L + 1) - 1/(d_L + 1) and a simple top Kirchhoff eigenvalue."""
    _require_refined_graph(K)
    with timed() as clock:
        L = connection_matrix(K)
        _, H, blocks = dirac_and_hodge(K)
        rho = float(jacobi_eigenvalues(H)[0]) if len(K) else 0.0
        d_L = int(L.sum(axis=1).max()) - 1
        bound = (d_L + 1) - 1.0 / (d_L + 1)
        deg = max((int(v) for v in np.diag(blocks[0])), default=0)
        bound_2d = 2 * deg - 1.0 / (2 * deg) if deg else 0.0
        details = {
            "rho": float(f"{rho:.6g}"),
            "d_L": d_L,
            "bound": float(f"{bound:.6g}"),
            "max-degree": deg,
            "bound-2d": float(f"{bound_2d:.6g}"),
            "bound-2d-holds": rho <= bound_2d + 1e-9,
        }
        witness = None
        if rho > bound + 1e-9:
            witness = {"rho": rho, "bound": bound}
        b0, _ = components_and_cycles(K)
        if b0 == 1 and blocks[0].shape[0] > 1:
            top = jacobi_eigenvalues(blocks[0])
            details["perron-gap"] = float(f"{top[0] - top[1]:.6g}")
            if witness is None and top[0] - top[1] <= 1e-8:
                witness = {"perron-gap": float(top[0] - top[1])}
        else:
            details["perron"] = "skipped: disconnected"
    return VerificationReport("bounds", witness is None, witness, clock.elapsed, details)


def functional_equation_check(K: Complex) -> VerificationReport:
    """charpoly(L^2) == charpoly(g^2) for graphs."""
    _require_1d(K)
    with timed() as clock:
        L = connection_matrix(K)
        g = green_star_matrix(K)
        a = charpoly_exact(L @ L)
        b = charpoly_exact(g @ g)
        witness = None
        if a != b:
            k = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
            witness = {"coefficient": k, "L2": a[k], "g2": b[k]}
    return VerificationReport("functional-eq", witness is None, witness, clock.elapsed)


def _strip_zero_roots(coeffs: list[int]) -> list[int]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def mckean_singer_check(K: Complex) -> VerificationReport:
    """Nonzero spectra of H0 and H1 coincide (exact charpolys without zero roots)."""
    _require_1d(K)
    with timed() as clock:
        _, _, blocks = dirac_and_hodge(K)
        p0 = _strip_zero_roots(charpoly_exact(blocks[0]))
        p1 = _strip_zero_roots(charpoly_exact(blocks[1])) if len(blocks) > 1 else [1]
        ok = p0 == p1
    witness = None if ok else {"H0": p0, "H1": p1}
    return VerificationReport("mckean-singer", ok, witness, clock.elapsed)


def hodge_charpoly_from_kirchhoff(H0) -> list[int]:
    """charpoly(H) of a graph rebuilt from its Kirchhoff matrix alone.

    charpoly(H1) = x^(|E| - |V|) charpoly(H0), so charpoly(H) is the product.
    """
    H0 = np.asarray(H0)
    verts = H0.shape[0]
    edges = int(np.trace(H0)) // 2
    p0 = charpoly_exact(H0)
    shift = edges - verts
    if shift >= 0:
        p1 = p0 + [0] * shift
    else:
        if any(p0[len(p0) + shift:]):
            raise NotKirchhoff("too few zero eigenvalues for the edge count")
        p1 = p0[: len(p0) + shift]
    return _poly_mul(p0, p1)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def sector_inertia_check(K: Complex) -> VerificationReport:
    """On refined graphs L has |V| positive and |E| negative eigenvalues."""
    _require_refined_graph(K)
    with timed() as clock:
        p, n, z = inertia_exact(connection_matrix(K))
        want = (len(K.vertices), len(K.edges), 0)
        ok = (p, n, z) == want
    witness = None if ok else {"expected": list(want), "actual": [p, n, z]}
    return VerificationReport("sector-inertia", ok, witness, clock.elapsed)


def isospectral_pair() -> tuple[Complex, Complex]:
    return generate(ISOSPECTRAL_TREE), generate(ISOSPECTRAL_LOOP)


def isospectral_pair_demo() -> VerificationReport:
    with timed() as clock:
        G, H = isospectral_pair()
        pg = charpoly_exact(connection_matrix(G))
        ph = charpoly_exact(connection_matrix(H))
        bg, bh = components_and_cycles(G), components_and_cycles(H)
        cg = betti_from_connection(refine(G)).b
        ch = betti_from_connection(refine(H)).b
        witness = None
        if pg != ph:
            witness = {"reason": "characteristic polynomials differ"}
        elif bg != (1, 0) or bh != (2, 1):
            witness = {"betti": [list(bg), list(bh)]}
        elif cg == ch or cg != bg or ch != bh:
            witness = {"refined-multiplicities": [list(cg), list(ch)]}
    return VerificationReport(
        "isospectral-demo",
        witness is None,
        witness,
        clock.elapsed,
        {
            "charpoly": pg,
            "betti": [list(bg), list(bh)],
            "refined-multiplicities": [list(cg), list(ch)],
        },
    )


B2_HEADER = [
    "trial", "seed", "simplices", "dim", "chi", "betti", "b2",
    "p", "n", "z", "distinct_eigenvalues", "irreducible_factors",
    "tr1", "tr2", "tr3", "tr4", "consistent",
]


def b2_rows(trials: int, n: int, m: int, seed: int):
    """One dict per random complex; exploratory, nothing is asserted."""
    if trials < 1:
        raise BadParameter("trials must be >= 1")
    if n < 1 or m < 1:
        raise BadParameter("n and m must be >= 1")
    from sympy import Poly, symbols

    x = symbols("x")
    rng = SplitMix64(seed)
    for t in range(trials):
        s = rng.next()
        K = random_complex(n, m, s)
        L = connection_matrix(K)
        b = betti_hodge(K).b
        cp = charpoly_exact(L)
        poly = Poly(cp, x)
        sqf = poly.sqf_part()
        _, factors = poly.factor_list()
        p, neg, z = inertia_exact(L)
        traces, P = [], np.eye(len(K), dtype=object)
        Lo = L.astype(object)
        for _ in range(4):
            P = P.dot(Lo)
            traces.append(int(np.trace(P)))
        chi = sum((-1) ** k * bk for k, bk in enumerate(b))
        yield {
            "trial": t,
            "seed": s,
            "simplices": len(K),
            "dim": K.dim,
            "chi": euler_characteristic(K),
            "betti": " ".join(map(str, b)),
            "b2": b[2] if len(b) > 2 else 0,
            "p": p,
            "n": neg,
            "z": z,
            "distinct_eigenvalues": sqf.degree(),
            "irreducible_factors": len(factors),
            "tr1": traces[0],
            "tr2": traces[1],
            "tr3": traces[2],
            "tr4": traces[3],
            "consistent": int(chi == p - neg),
        }


def b2_experiment(trials: int, n: int, m: int, seed: int) -> str:
    """CSV table of b2 against spectral statistics of L."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=B2_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in b2_rows(trials, n, m, seed):
        writer.writerow(row)
    return buf.getvalue()


def all_betti(K: Complex) -> list[BettiVector]:
    """Every method that applies to K."""
    out = [betti_hodge(K)]
    if K.dim <= 1:
        out += [betti(K, "kirchhoff"), betti(K, "hodge-spectrum"), betti_combinatorial(K)]
        if K.origin is not None and K.parent is not None and K.parent.dim <= 1:
            out.append(betti_from_connection(K))
    return out
