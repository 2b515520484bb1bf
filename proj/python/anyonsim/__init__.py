"""Braiding simulator for Majorana and Fibonacci anyons."""

from ._core import (
    Error,
    __version__,
    bdg_spectrum,
    berry_exchange,
    block_matrices,
    check_relations,
    compile_weave,
    composite_loop,
    distance,
    enumerate_basis,
    fib_braid,
    fusion_distribution,
    ising_unitary,
    jr_zero_mode,
    splitting_scan,
)

__all__ = [
    "Error",
    "__version__",
    "bdg_spectrum",
    "berry_exchange",
    "block_matrices",
    "check_relations",
    "compile_weave",
    "composite_loop",
    "distance",
    "enumerate_basis",
    "fib_braid",
    "fusion_distribution",
    "ising_unitary",
    "jr_zero_mode",
    "splitting_scan",
]
