"""Exact spectral computations on finite abstract simplicial complexes."""

from .complex import (
    Complex,
    Simplex,
    SimplexSet,
    barycentric_refine,
    components_and_cycles,
    core,
    euler_characteristic,
    generate,
    random_complex,
    random_graph,
    refine,
    star,
    unit_sphere,
    wu_characteristic,
    zagreb_index,
)
from .errors import SimspecError
from .hearing import all_betti, betti, isospectral_pair, verify_hydrogen
from .operators import (
    connection_matrix,
    dirac_and_hodge,
    exterior_derivative,
    green_star_matrix,
    hydrogen_conjugator,
    hydrogen_matrix,
    operator,
    wu_matrix,
)
from .report import VerificationReport

__all__ = [
    "Complex",
    "Simplex",
    "SimplexSet",
    "SimspecError",
    "VerificationReport",
    "all_betti",
    "barycentric_refine",
    "betti",
    "components_and_cycles",
    "connection_matrix",
    "core",
    "dirac_and_hodge",
    "euler_characteristic",
    "exterior_derivative",
    "generate",
    "green_star_matrix",
    "hydrogen_conjugator",
    "hydrogen_matrix",
    "isospectral_pair",
    "operator",
    "random_complex",
    "random_graph",
    "refine",
    "star",
    "unit_sphere",
    "verify_hydrogen",
    "wu_characteristic",
    "wu_matrix",
    "zagreb_index",
]
