"""Exact line-bundle cohomology and q-ample cones on type A flag varieties."""

from .bwb import CohomologyResult, bwb_cohomology, euler_characteristic, weyl_dimension
from .cones import ChamberRecord, chamber_map, q_ample_index, q_ample_index_oracle
from .errors import CapacityError, InputError
from .lefschetz import BettiProfile, Verdict, ampleness_verdict
from .projective import TwistSpec, bott_h, pn_q_ample_index
from .roots import (
    RankedRootSystem, Weight, WeylElement, apply, dominant_conjugate, dot_action,
    enumerate_weyl_group, pairing,
)

__version__ = "0.1.0"
