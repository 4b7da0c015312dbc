# SPDX-License-Identifier: Apache-2.0
"""Exact constructions and counters for point sets with many repeated angles.

Points are ``(re, im)`` pairs of coefficient lists over 1, alpha, ...,
alpha^(d-1); all integers are plain Python ints.
"""

from ._core import (
    BudgetExceeded,
    Context,
    InputError,
    InvariantViolation,
    angle_at,
    construct,
    count,
    count_distinct_directions,
    expected_count,
    gen_G,
    normalize_tangent,
    run_cli,
    size_for_n,
)

PRESETS = {
    "pi4": ([-1, 1], 1, ("1/2", "3/2")),
    "sqrt2": ([-2, 0, 1], 1, ("1", "2")),
    "pi6": ([-3, 0, 1], 3, ("1", "2")),
}


def preset(name):
    """Context for one of the built-in angles: pi4, sqrt2 or pi6."""
    minpoly, b, iso = PRESETS[name]
    return Context(minpoly, b, iso)


__all__ = [
    "BudgetExceeded",
    "Context",
    "InputError",
    "InvariantViolation",
    "PRESETS",
    "angle_at",
    "construct",
    "count",
    "count_distinct_directions",
    "expected_count",
    "gen_G",
    "normalize_tangent",
    "preset",
    "run_cli",
    "size_for_n",
]
