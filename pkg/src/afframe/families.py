"""Family registry: one dataclass recipe fully determines a generated curve."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import hilbert, koch, snowflake
from .frame import DiscreteCurve, Scalar, Vec

KOCH = "koch"
SNOWFLAKE = "snowflake"
HILBERT = "hilbert"
FAMILIES = (KOCH, SNOWFLAKE, HILBERT)


@dataclass(frozen=True)
class FamilySpec:
    """Fractal family, step, and initial triple; 3-dimensional inits grow a
    space curve with kappa_bar/tau scaled off kappa by the given ratios."""

    family: str
    step: int
    init: tuple[Vec, Vec, Vec]
    bar_ratio: Scalar = 0
    tau_ratio: Scalar = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def point_count(family: str, step: int, dim: int = 2) -> int:
    """Number of points the generated curve will have."""
    if family == KOCH:
        return koch.koch_counts(step).points
    if family == SNOWFLAKE:
        if dim == 3:
            raise ValueError("snowflake has no space extension (closure breaks)")
        return 3 * 4 ** (step - 1)
    if family == HILBERT:
        return hilbert.inflection_count(step)
    raise ValueError(f"unknown family {family!r}")


def code_string(family: str, step: int) -> str:
    if family == KOCH:
        return koch.koch_code(step)
    if family == SNOWFLAKE:
        return snowflake.snowflake_code(step)
    if family == HILBERT:
        return hilbert.expand_word(step)
    raise ValueError(f"unknown family {family!r}")


def generate(spec: FamilySpec) -> DiscreteCurve:
    dim = len(spec.init[0])
    if dim == 2:
        if spec.family == KOCH:
            return koch.generate_koch(spec.init, spec.step)
        if spec.family == SNOWFLAKE:
            return snowflake.generate_snowflake(spec.init, spec.step)
        return hilbert.generate_hilbert(spec.init, spec.step)
    if spec.family == KOCH:
        return koch.extend_space_koch(spec.init, spec.step, tau_ratio=spec.tau_ratio)
    if spec.family == HILBERT:
        return hilbert.extend_space_hilbert(
            spec.init, spec.step, bar_ratio=spec.bar_ratio, tau_ratio=spec.tau_ratio
        )
    raise ValueError("snowflake has no space extension (closure breaks)")
