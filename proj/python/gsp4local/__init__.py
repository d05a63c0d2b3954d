"""Exact verification of local Bessel-model zeta integrals for GSp(4) x GL(2).

All values are exact: rationals are returned as "num/den" strings and symbolic
values as monomial expansions.  Verification entry points return a
VerifyReport tree whose ok() aggregates every child check.
"""

from ._gsp4local import (
    VerifyReport,
    bessel_value,
    render_table,
    run_verify,
    sugano_coefficients,
    verify_bessel,
    verify_cancellation,
    verify_cosets,
    verify_hecke,
    verify_volumes,
    verify_whittaker,
    verify_zeta,
    volume,
    whittaker_value,
)

__all__ = [
    "VerifyReport",
    "bessel_value",
    "render_table",
    "run_verify",
    "sugano_coefficients",
    "verify_bessel",
    "verify_cancellation",
    "verify_cosets",
    "verify_hecke",
    "verify_volumes",
    "verify_whittaker",
    "verify_zeta",
    "volume",
    "whittaker_value",
]
