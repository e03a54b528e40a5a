"""Trefoil knot group representations into quaternion and affine isometry groups."""

import json

from ._trefoil import (
    TrefoilError,
    affine_matrices,
    braid_residual,
    classify,
    fox_derivative,
    margulis_alpha,
    reduce_word,
    run,
    verify_crystal,
)


def report(*args):
    """Run a CLI subcommand with --json and return the parsed report."""
    code, out, err = run([*args, "--json"])
    if code == 2:
        raise ValueError(err.strip())
    result = json.loads(out)
    result["exit_code"] = code
    return result


__all__ = [
    "TrefoilError",
    "affine_matrices",
    "braid_residual",
    "classify",
    "fox_derivative",
    "margulis_alpha",
    "reduce_word",
    "report",
    "run",
    "verify_crystal",
]
