"""Numeric tolerances and size caps used across the package.

Tolerances are spaced one decade apart so that construction error stays
separated from verification error.
"""

TOL_HERMITIAN = 1e-12
TOL_COMMUTE = 1e-10
TOL_IDEMPOTENT = 1e-10
TOL_EIGENVALUE = 1e-9
TOL_RECONSTRUCT = 1e-9
TOL_CENTER = 1e-10
TOL_NORM = 1e-10
EIG_CLUSTER = 1e-7

# Dense term matrices are capped at this dimension.
MAX_TERM_DIM = 4096
# Operator-algebra computations are capped at this carrier dimension.
MAX_ALGEBRA_DIM = 64
# State-vector oracles refuse Hilbert spaces larger than this.
MAX_ORACLE_DIM = 2 ** 14


def tolerance_report() -> dict:
    """All tolerances in force, for inclusion in CLI reports."""
    return {
        "tol_hermitian": TOL_HERMITIAN,
        "tol_commute": TOL_COMMUTE,
        "tol_idempotent": TOL_IDEMPOTENT,
        "tol_eigenvalue": TOL_EIGENVALUE,
        "tol_reconstruct": TOL_RECONSTRUCT,
        "tol_center": TOL_CENTER,
        "tol_norm": TOL_NORM,
        "eig_cluster": EIG_CLUSTER,
        "max_term_dim": MAX_TERM_DIM,
        "max_algebra_dim": MAX_ALGEBRA_DIM,
        "max_oracle_dim": MAX_ORACLE_DIM,
    }
