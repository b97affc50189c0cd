"""Clans, domino tableaux and wall-crossing operators for SO*(2n)."""

from ._core import (
    cayley,
    cells,
    cross,
    enumerate_clans,
    format_clan,
    hmap,
    parity,
    tau,
    verify,
    wallcross,
)

__all__ = [
    "cayley",
    "cells",
    "cross",
    "enumerate_clans",
    "format_clan",
    "hmap",
    "parity",
    "tau",
    "verify",
    "wallcross",
]
