"""
The 1-ample bundle L = L_(2,-1) on SL_3/B with H^2(X, L + K_X) != 0.

Kodaira-type vanishing H^i(L + K) = 0 for i > q fails for this q-ample L
with q = 1. ``check`` recomputes every ingredient and reports mismatches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import bwb, cones
from .roots import Weight

L_WEIGHT = Weight((2, -1))
CANONICAL = Weight((-2, -2))  # K_X = L_{-2 rho}

EXPECTED = {
    "qmin_closed_form": 1,
    "qmin_oracle": 1,
    "twisted_weight": [0, -3],
    "cohomology": {"degree": 2, "highest_weight": [0, 0], "dimension": 1},
    "h": [0, 0, 1, 0],
}


@dataclass
class Report:
    computed: dict[str, Any]
    expected: dict[str, Any] = field(default_factory=lambda: dict(EXPECTED))

    @property
    def mismatches(self) -> dict[str, tuple[Any, Any]]:
        return {k: (self.expected[k], self.computed.get(k))
                for k in self.expected if self.computed.get(k) != self.expected[k]}

    @property
    def passed(self) -> bool:
        return not self.mismatches


def check(oracle_box: int = cones.ORACLE_BOX, m_min: int = cones.ORACLE_M_MIN,
          m_max: int = cones.ORACLE_M_MAX, *,
          q_index: Callable[[Weight], int] | None = None,
          q_oracle: Callable[..., int] | None = None,
          cohomology: Callable[[Weight], bwb.CohomologyResult] | None = None) -> Report:
    # injectable backends exist for negative-control tests
    q_index = q_index or cones.q_ample_index
    q_oracle = q_oracle or cones.q_ample_index_oracle
    cohomology = cohomology or bwb.bwb_cohomology

    twisted = L_WEIGHT + CANONICAL
    res = cohomology(twisted)
    coh = None
    if not res.vanishes:
        coh = {"degree": res.degree, "highest_weight": list(res.highest_weight),
               "dimension": res.dimension}
    return Report({
        "qmin_closed_form": q_index(L_WEIGHT),
        "qmin_oracle": q_oracle(L_WEIGHT, oracle_box, m_min, m_max),
        "twisted_weight": list(twisted),
        "cohomology": coh,
        "h": res.h_vector(),
    })
