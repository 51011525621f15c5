"""Exact toric GIT quotients of affine space by diagonal tori.

Rationals are passed and returned as "p/q" strings. Functions taking a
``weights`` argument default to the built-in twelve-label instance; pass a
dict ``{"labels": [...], "A": {"entries": [[...], ...]}}`` for another one.
"""

from ._core import (
    InputError,
    certify_support,
    chamber_at,
    chamber_svg,
    eliminate_a21,
    enumerate_chambers,
    instance,
    j_invariant,
    kernel_lattice_basis,
    lattices_equal,
    minimal_chart_cones,
    minimal_support_sets,
    quotient_fan,
    run_cli,
    scale_normalize,
    unstable_locus,
    verify_paper,
    w_invariants,
    wall_crossing,
)

__all__ = [
    "InputError",
    "certify_support",
    "chamber_at",
    "chamber_svg",
    "eliminate_a21",
    "enumerate_chambers",
    "instance",
    "j_invariant",
    "kernel_lattice_basis",
    "lattices_equal",
    "minimal_chart_cones",
    "minimal_support_sets",
    "quotient_fan",
    "run_cli",
    "scale_normalize",
    "unstable_locus",
    "verify_paper",
    "w_invariants",
    "wall_crossing",
]

__version__ = "0.1.0"
