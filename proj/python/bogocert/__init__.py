"""Exact heights, Kummer ramification analysis, and height-gap certificates."""

from ._core import (  # noqa: F401
    KernelError,
    NumberField,
    certify,
    check_a1,
    construct_alpha,
    dedekind_check,
    discriminant,
    factor_mod_p,
    garza_bound,
    height,
    hensel_lift_blocks,
    is_lth_power,
    min_poly,
    norm,
    resultant,
    silverman_bound,
    split_prime,
    squarefree_part,
    tower_bound_42,
    verify_certificate,
)

__all__ = [
    "KernelError",
    "NumberField",
    "certify",
    "check_a1",
    "construct_alpha",
    "dedekind_check",
    "discriminant",
    "factor_mod_p",
    "garza_bound",
    "height",
    "hensel_lift_blocks",
    "is_lth_power",
    "min_poly",
    "norm",
    "resultant",
    "silverman_bound",
    "split_prime",
    "squarefree_part",
    "tower_bound_42",
    "verify_certificate",
]
