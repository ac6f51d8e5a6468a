"""Kostka polynomials, zero-fiber characters and exact Calogero-Moser checks.

Partitions are passed as "3,1,1" strings or lists of parts; tuples of
partitions as "2,1;-;1" strings or lists of such. Big integers come back as
Python ints and rationals as fractions.Fraction.
"""

from ._kcm import (
    character,
    character_wreath,
    enumerate_partitions,
    fixed_point_exponents,
    hook_lengths,
    kostka,
    kostka_wreath,
    schur_p1n,
    syt_count,
    tangent_weights,
    verify_all,
    verify_cm,
    wilson_embed,
)

__all__ = [
    "character",
    "character_wreath",
    "enumerate_partitions",
    "fixed_point_exponents",
    "hook_lengths",
    "kostka",
    "kostka_wreath",
    "schur_p1n",
    "syt_count",
    "tangent_weights",
    "verify_all",
    "verify_cm",
    "wilson_embed",
]
