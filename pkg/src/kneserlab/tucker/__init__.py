"""
Octahedral Tucker toolkit

- Truncated and full octahedral balls, precedence and total orders
- Antipodal maps, including the map induced by a coloring
- Complementary-pair search and brute-force sweeps
- Lift from the truncated to the full ball with a soundness check
"""

from kneserlab.tucker.ball import (
    Flavor,
    SignedPair,
    ball_elements,
    ball_size,
    contained,
    enumerate_ball,
    pair_prec,
    prec,
)
from kneserlab.tucker.complementary import (
    ComplementaryPair,
    TuckerSweepReport,
    exhaust_full_tucker,
    exhaust_truncated_tucker,
    find_complementary,
    find_k_complementary,
    iter_complementary,
    iter_k_complementary,
    related_pairs,
    sample_truncated_tucker,
)
from kneserlab.tucker.labeling import (
    AntipodalMap,
    antipodal_map_count,
    iter_antipodal_maps,
    lambda_from_coloring,
    orbit_index,
    random_antipodal_map,
    signed_labels,
)
from kneserlab.tucker.lift import (
    LiftCase,
    LiftReport,
    LiftViolation,
    ViolationKind,
    check_lift_soundness,
    lift_case,
    lift_lambda,
    project,
)
from kneserlab.tucker.order import TotalOrder, canonical_total_order

__all__ = [
    "AntipodalMap",
    "ComplementaryPair",
    "Flavor",
    "LiftCase",
    "LiftReport",
    "LiftViolation",
    "SignedPair",
    "TotalOrder",
    "TuckerSweepReport",
    "ViolationKind",
    "antipodal_map_count",
    "ball_elements",
    "ball_size",
    "canonical_total_order",
    "check_lift_soundness",
    "contained",
    "enumerate_ball",
    "exhaust_full_tucker",
    "exhaust_truncated_tucker",
    "find_complementary",
    "find_k_complementary",
    "iter_antipodal_maps",
    "iter_complementary",
    "iter_k_complementary",
    "lambda_from_coloring",
    "lift_case",
    "lift_lambda",
    "orbit_index",
    "pair_prec",
    "prec",
    "project",
    "random_antipodal_map",
    "related_pairs",
    "sample_truncated_tucker",
    "signed_labels",
]
