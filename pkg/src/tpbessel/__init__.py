"""High-relative-accuracy linear algebra for totally positive
Bessel and reverse Bessel collocation matrices."""

from .bessel import (
    CollocationSpec,
    basis_matrix_A,
    basis_matrix_C,
    bd_bessel_collocation,
    bd_of_A,
    bd_of_C,
    bd_reverse_bessel_collocation,
    bd_vandermonde,
    bessel_poly,
    collocation_bd,
    collocation_matrix,
    reverse_bessel_poly,
    semifactorial,
)
from .bidiagonal import (
    BidiagonalDecomposition,
    bd_from_matrix,
    bd_product,
    bd_transpose,
    expand,
    from_bdf,
    to_bdf,
    validate,
)
from .matrices import (
    Matrix,
    NevilleResult,
    NodeSequence,
    all_minors_nonnegative,
    is_tp_nonsingular,
    neville_eliminate,
    vandermonde_matrix,
)
from .scalars import (
    PrecisionPolicy,
    parse_rational,
    refine_until_stable,
    round_to_double,
)
from .solvers import (
    SignPatternVector,
    SpectrumResult,
    determinant,
    eigenvalues,
    inverse,
    naive_eigenvalues,
    naive_lu_solve,
    naive_singular_values,
    relative_errors,
    singular_values,
    solve,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
