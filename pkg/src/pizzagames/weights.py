"""Exact rational weights.

Every weight in the suite is a fractions.Fraction: all sign tests and
comparisons in the partition algorithm must be exact, so floats are only
admitted as inputs (converted through their decimal spelling) and in the
benchmark-only float mode of the kernels.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Weight = Fraction
WeightLike = Union[int, float, str, Fraction]


def parse_weight(x: WeightLike) -> Fraction:
    """Parse an integer, decimal or "p/q" literal into an exact rational.

    Floats are interpreted by their decimal representation (0.1 -> 1/10),
    not by their binary expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValueError("booleans are not weights")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse weight {x!r}") from exc
    raise ValueError(f"cannot parse weight {x!r}")


def parse_weights(xs: Iterable[WeightLike]) -> tuple[Fraction, ...]:
    return tuple(parse_weight(x) for x in xs)


def format_weight(w: Fraction) -> str:
    """Render a weight as "p" or "p/q" (exact round-trip with parse_weight)."""
    return str(w)


def weight_to_json(w: Fraction) -> Union[int, str]:
    """Integers stay JSON numbers; proper fractions become "p/q" strings."""
    if w.denominator == 1:
        return int(w)
    return str(w)


def scale_to_integers(seq: Sequence[Fraction]) -> tuple[list[int], int]:
    """Clear denominators: returns (numerators, common denominator L) with
    seq[i] == numerators[i] / L.  The standard trick for doing the partition
    arithmetic over plain integers.
    """
    if not seq:
        return [], 1
    denom = lcm(*(w.denominator for w in seq))
    return [int(w * denom) for w in seq], denom
