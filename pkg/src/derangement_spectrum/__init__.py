"""Exact spectrum of the derangement graph on the symmetric group."""

from .partitions import Partition, dim, enumerate_partitions, parse
from .spectrum import (
    SpectrumEntry,
    derangement_number,
    eta_character,
    eta_new,
    eta_renteln,
    eta_schur_sum,
    spectrum_table,
)

__all__ = [
    "Partition",
    "SpectrumEntry",
    "derangement_number",
    "dim",
    "enumerate_partitions",
    "eta_character",
    "eta_new",
    "eta_renteln",
    "eta_schur_sum",
    "parse",
    "spectrum_table",
]
