"""Neural codes, neural ideals and their polarization."""

from ._polarnc import (
    Code,
    Motif,
    PolarError,
    cf_of_pm_ideal,
    cf_of_polarized_code,
    cf_polarized_ideal,
    deactivate,
    formal_polarize,
    gjs_prime_test,
    is_motif_of,
    max_mot,
    max_mot_complement,
    max_mot_polarized,
    max_par_mot,
    min_primes,
    min_primes_polarized,
    neural_ideal_cf,
    polarize_code,
    polarize_partial_motif,
    primary_decomposition,
    variety,
    variety_of_neural_ideal,
)

__all__ = [
    "Code",
    "Motif",
    "PolarError",
    "cf_of_pm_ideal",
    "cf_of_polarized_code",
    "cf_polarized_ideal",
    "deactivate",
    "formal_polarize",
    "gjs_prime_test",
    "is_motif_of",
    "max_mot",
    "max_mot_complement",
    "max_mot_polarized",
    "max_par_mot",
    "min_primes",
    "min_primes_polarized",
    "neural_ideal_cf",
    "polarize_code",
    "polarize_partial_motif",
    "primary_decomposition",
    "variety",
    "variety_of_neural_ideal",
]
