"""Named identity checks and the bundled fixture set they run on."""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from . import hearing
from .complex import Complex, euler_characteristic, generate, refine, wu_characteristic
from .errors import NotOneDimensional, SimspecError
from .linalg import det_bareiss, inverse_exact
from .operators import (
    connection_matrix,
    first_mismatch,
    gauss_bonnet_check,
    green_star_matrix,
    wu_matrix,
)
from .report import VerificationReport, combine, timed


def green_star_check(K: Complex) -> VerificationReport:
    """Star formula against the exact inverse of L."""
    with timed() as clock:
        g = green_star_matrix(K)
        inv = inverse_exact(connection_matrix(K))
        bad = np.argwhere(inv != g.astype(object))
        witness = None
        if bad.size:
            i, j = (int(v) for v in bad[0])
            witness = {"index": [i, j], "expected": str(inv[i, j]), "actual": int(g[i, j])}
    return VerificationReport("green-star", witness is None, witness, clock.elapsed)


def unimodularity_check(K: Complex) -> VerificationReport:
    with timed() as clock:
        det = det_bareiss(connection_matrix(K))
    ok = det in (-1, 1)
    return VerificationReport(
        "unimodularity", ok, None if ok else {"det": str(det)}, clock.elapsed, {"det": det}
    )


def energy_check(K: Complex) -> VerificationReport:
    """Total energies: sum g = chi, sum M = Wu, sum (M - g) = Wu - chi.

    When Y is defined, sum Y = chi - Wu.
    """
    with timed() as clock:
        chi = euler_characteristic(K)
        wu = wu_characteristic(K)
        g = green_star_matrix(K)
        ops = wu_matrix(K)
        sums = {
            "g": int(g.sum()),
            "M": int(ops.M.sum()),
            "M-g": int((ops.M - g).sum()),
        }
        expected = {"g": chi, "M": wu, "M-g": wu - chi}
        if ops.Y is not None:
            sums["Y"] = int(ops.Y.sum())
            expected["Y"] = chi - wu
        witness = None
        for key, want in expected.items():
            if sums[key] != want:
                witness = {"sum": key, "expected": want, "actual": sums[key]}
                break
    return VerificationReport(
        "energy", witness is None, witness, clock.elapsed, {"chi": chi, "wu": wu, "sums": sums}
    )


def hydrogen_check(K: Complex) -> VerificationReport:
    return hearing.verify_hydrogen(K)


GENERAL = {
    "green-star": green_star_check,
    "unimodularity": unimodularity_check,
    "energy": energy_check,
    "chi-inertia": hearing.chi_from_inertia,
    "gauss-bonnet": gauss_bonnet_check,
}
ONE_DIM = {"functional-eq": hearing.functional_equation_check}
REFINED = {
    "hydrogen": hydrogen_check,
    "bounds": hearing.spectral_bounds_check,
    "support": hearing.eigenvector_support_check,
}
CHECK_NAMES = sorted([*GENERAL, *ONE_DIM, *REFINED, "isospectral-demo"])


def applies(name: str, K: Complex) -> bool:
    if name in GENERAL:
        return True
    if name in ONE_DIM:
        return K.dim <= 1
    if name in REFINED:
        return K.origin is not None and K.parent is not None and K.parent.dim <= 1
    return False


def run_check(name: str, K: Complex | None) -> VerificationReport:
    """Run one named check; raises the module error if K does not qualify."""
    if name == "isospectral-demo":
        return hearing.isospectral_pair_demo()
    if K is None:
        raise SimspecError(f"check {name!r} needs an input complex")
    if name in GENERAL:
        return GENERAL[name](K)
    if name in ONE_DIM:
        if K.dim > 1:
            raise NotOneDimensional(f"{name} needs a complex of dimension <= 1")
        return ONE_DIM[name](K)
    if name in REFINED:
        return REFINED[name](K)
    raise SimspecError(f"unknown check {name!r}")


def fixture_names() -> list[str]:
    folder = resources.files("simspec") / "fixtures"
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


def fixture(name: str) -> Complex:
    text = (resources.files("simspec") / "fixtures" / f"{name}.json").read_text()
    return generate(json.loads(text))


def fixture_set() -> list[tuple[str, Complex]]:
    """Every bundled complex and its first refinement."""
    out = []
    for name in fixture_names():
        K = fixture(name)
        out.append((name, K))
        out.append((f"{name}/refined", refine(K)))
    return out


def run_on_fixtures(name: str) -> VerificationReport:
    if name == "isospectral-demo":
        return hearing.isospectral_pair_demo()
    parts = []
    for label, K in fixture_set():
        if applies(name, K):
            r = run_check(name, K)
            r.name = label
            parts.append(r)
    return combine(name, parts)


__all__ = [
    "CHECK_NAMES",
    "applies",
    "energy_check",
    "fixture",
    "fixture_set",
    "green_star_check",
    "run_check",
    "run_on_fixtures",
    "unimodularity_check",
]
