"""Python front end for the fcensus C++ core."""

from ._fcensus import (  # noqa: F401
    FcensusError,
    acceptance_check_ids,
    c_diag,
    c_eig,
    c_inf,
    c_inf_diag,
    census,
    census_csv,
    commutative_subalgebra_count,
    diag_subalgebra_count,
    exact_X_n2,
    gaussian_binomial,
    in_X,
    jordan_shape,
    leading_term,
    optimal_shapes,
    quiver_maximizers,
    run_check,
)
