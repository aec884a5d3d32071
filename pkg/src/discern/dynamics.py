"""Log-linear evolution of uncertainty with knowledge or ignorance.

Uncertainty decays exponentially as knowledge grows and grows exponentially
with ignorance, so its logarithm is linear in either variable.  A model is
calibrated from the uncertainty at the two ends of the unit interval and then
maps in both directions between uncertainty and the variable.
"""

import math
from dataclasses import dataclass

KNOWLEDGE = "knowledge"
IGNORANCE = "ignorance"

# Slack for uncertainty values that land a few ulps outside the calibrated
# bounds (exp/log round trips do this at the boundaries themselves).
_BOUNDARY_REL_TOL = 1e-9

_CALIBRATION_TOL = 1e-12


@dataclass(frozen=True)
class EvolutionModel:
    """Calibrated constants of log(uncertainty) = slope * variable + intercept.

    Knowledge-kind models have negative slope (more knowledge, less
    uncertainty); ignorance-kind models have positive slope.
    """

    slope: float
    intercept: float
    kind: str
    u_min: float
    u_max: float

    def __post_init__(self) -> None:
        if self.kind not in (KNOWLEDGE, IGNORANCE):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if not self.u_min > 0:
            raise ValueError(f"u_min must be positive, got {self.u_min}")
        if not self.u_max > self.u_min:
            raise ValueError(f"u_max must exceed u_min, got [{self.u_min}, {self.u_max}]")
        if self.slope == 0:
            raise ValueError("slope must be non-zero")
        if self.kind == KNOWLEDGE and self.slope >= 0:
            raise ValueError("a knowledge model needs a negative slope")
        if self.kind == IGNORANCE and self.slope <= 0:
            raise ValueError("an ignorance model needs a positive slope")
        at_zero = self.u_max if self.kind == KNOWLEDGE else self.u_min
        at_one = self.u_min if self.kind == KNOWLEDGE else self.u_max
        for value, expected in ((self.predict_uncertainty(0.0), at_zero),
                                (self.predict_uncertainty(1.0), at_one)):
            if not math.isclose(value, expected, rel_tol=_CALIBRATION_TOL,
                                abs_tol=_CALIBRATION_TOL):
                raise ValueError(
                    f"model does not reproduce its boundary values: "
                    f"predicted {value}, expected {expected}"
                )

    def predict_uncertainty(self, value: float) -> float:
        """Uncertainty at a knowledge/ignorance level in [0, 1]."""
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"variable must lie in [0, 1], got {value}")
        return math.exp(self.slope * value + self.intercept)

    def infer_variable(self, u: float) -> float:
        """Knowledge/ignorance level at an uncertainty in [u_min, u_max]."""
        if u < self.u_min or u > self.u_max:
            if math.isclose(u, self.u_min, rel_tol=_BOUNDARY_REL_TOL):
                u = self.u_min
            elif math.isclose(u, self.u_max, rel_tol=_BOUNDARY_REL_TOL):
                u = self.u_max
            else:
                raise ValueError(
                    f"uncertainty {u} outside [{self.u_min}, {self.u_max}]"
                )
        value = (math.log(u) - self.intercept) / self.slope
        return min(1.0, max(0.0, value))


def calibrate(u_at_zero: float, u_at_one: float, kind: str) -> EvolutionModel:
    """Fit the log-linear model through the uncertainty values at variable 0
    and variable 1.

    A knowledge model must shrink (u_at_one < u_at_zero) and an ignorance
    model must grow; equal values would force a zero slope and are rejected.
    """
    if kind not in (KNOWLEDGE, IGNORANCE):
        raise ValueError(f"unknown model kind {kind!r}")
    if u_at_zero <= 0 or u_at_one <= 0:
        raise ValueError("uncertainty bounds must be positive")
    if kind == KNOWLEDGE and not u_at_one < u_at_zero:
        raise ValueError(
            "a knowledge model needs uncertainty to shrink: "
            f"expected u_at_one < u_at_zero, got {u_at_one} >= {u_at_zero}"
        )
    if kind == IGNORANCE and not u_at_one > u_at_zero:
        raise ValueError(
            "an ignorance model needs uncertainty to grow: "
            f"expected u_at_one > u_at_zero, got {u_at_one} <= {u_at_zero}"
        )
    return EvolutionModel(
        slope=math.log(u_at_one / u_at_zero),
        intercept=math.log(u_at_zero),
        kind=kind,
        u_min=min(u_at_zero, u_at_one),
        u_max=max(u_at_zero, u_at_one),
    )
