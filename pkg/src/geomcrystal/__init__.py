"""Exact positive geometric crystal for the affine algebra D_6^(1) at the spin node."""

from .d6 import (
    KFamily,
    PointV1,
    PointV2,
    act_e0_v1,
    act_e0_via_sigma,
    act_e_v1,
    act_e_v2,
    build_V1,
    build_V2,
    epsilon_v1,
    epsilon_v2,
    gamma_v1,
    gamma_v2,
    k_family,
    sigma_bar,
    sigma_bar_inv,
)
from .exact_arith import DomainError, parse_rational, sample_positive
from .spin import SpinVector, apply_word
from .unipotent import WordCrystal, get_preset
from .verify import CheckReport, CheckSpec, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "KFamily",
    "PointV1",
    "PointV2",
    "act_e0_v1",
    "act_e0_via_sigma",
    "act_e_v1",
    "act_e_v2",
    "build_V1",
    "build_V2",
    "epsilon_v1",
    "epsilon_v2",
    "gamma_v1",
    "gamma_v2",
    "k_family",
    "sigma_bar",
    "sigma_bar_inv",
    "DomainError",
    "parse_rational",
    "sample_positive",
    "SpinVector",
    "apply_word",
    "WordCrystal",
    "get_preset",
    "CheckReport",
    "CheckSpec",
    "run_check",
    "run_suite",
]
