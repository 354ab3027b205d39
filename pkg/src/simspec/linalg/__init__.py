from .exact import (
    as_exact,
    charpoly_exact,
    charpoly_faddeev,
    det_bareiss,
    identity,
    inertia_exact,
    inverse_exact,
    is_symmetric,
    kernel_exact,
    multiplicity_at,
    poly_eval,
    rank_exact,
    sign_variations,
)
from .jacobi import SpectralSummary, eig_symmetric, jacobi_eigenvalues
from .modular import charpoly_multimodular
