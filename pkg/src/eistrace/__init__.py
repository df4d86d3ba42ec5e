"""Exact kernel coefficients, convolution identities and linear-independence
certificates for twisted Eisenstein trace forms.

Hot polynomial kernels run on a compiled extension when available; set
EISTRACE_PURE_PYTHON=1 to force the pure-Python fallback.  The active
backend is reported in eistrace.exact.BACKEND.
"""

from .exact import BACKEND, Cyclotomic, Rational
from .chars import (
    DirichletCharacter,
    all_characters,
    primitive_characters,
    quadratic_character,
    trivial_character,
)
from .bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    sigma_zero,
    twisted_bernoulli,
    zeta_negative,
)
from .qforms import (
    QSeries,
    coeff_count,
    cusp_basis,
    delta_series,
    dim_cusp,
    dim_modular,
    eisenstein_double,
    eisenstein_level1,
    eisenstein_twisted,
    rc_bracket,
    sigma_classical,
    sigma_double,
    sigma_twisted,
)
from .kernels import (
    coeff_table,
    cuspidality_certificate,
    f_coeff,
    kernel_bracket,
    kernel_coefficients,
    kernel_product,
    normalize,
    trace_bracket_coeff,
    trace_product_coeff,
)
from .cycmat import (
    build_conjecture_matrix,
    build_matrix,
    determinant,
    is_nonsingular,
)
from .bounds import bound_eval, epsilon_maeda, min_weight
from .verify import (
    maeda_scan,
    scan_conjectures,
    verify_identities_bracket,
    verify_identities_product,
    verify_zero_space,
)
from .cache import CoefficientCache

__version__ = "0.1.0"
