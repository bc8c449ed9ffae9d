"""Alternating zeta-regularized products and the modified gamma function."""

from ._core import (
    EvalConfig,
    ProductSpec,
    SeriesResult,
    TailMethod,
    VerificationReport,
    alt_hurwitz_zeta,
    classical_lerch_check,
    dirichlet_eta,
    gamma_tilde,
    hurwitz_zeta,
    kurokawa_wakayama,
    mod_stieltjes,
    psi_tilde,
    psi_tilde_n,
    reg_alt_product,
    verify_mizuno,
    verify_suite,
    verify_wallis,
)

__all__ = [
    "EvalConfig",
    "ProductSpec",
    "SeriesResult",
    "TailMethod",
    "VerificationReport",
    "alt_hurwitz_zeta",
    "classical_lerch_check",
    "dirichlet_eta",
    "gamma_tilde",
    "hurwitz_zeta",
    "kurokawa_wakayama",
    "mod_stieltjes",
    "psi_tilde",
    "psi_tilde_n",
    "reg_alt_product",
    "verify_mizuno",
    "verify_suite",
    "verify_wallis",
]

__version__ = "1.0.0"
