"""Radio labelings of Cartesian products of two trees."""

from ._core import (
    Labeling,
    Ordering,
    Product,
    RadioError,
    Tree,
    brute_force_weight_centers,
    check_distance_condition,
    check_level_condition,
    check_sufficient_conditions,
    closed_form_rn,
    delta_sum,
    exact_rn,
    family_ordering,
    greedy_label,
    is_feasible_ordering,
    lower_bound,
    ordering_from_labeling,
    satisfies_endpoint_condition,
    verify,
)

__all__ = [
    "Labeling",
    "Ordering",
    "Product",
    "RadioError",
    "Tree",
    "brute_force_weight_centers",
    "check_distance_condition",
    "check_level_condition",
    "check_sufficient_conditions",
    "closed_form_rn",
    "delta_sum",
    "exact_rn",
    "family_ordering",
    "greedy_label",
    "is_feasible_ordering",
    "lower_bound",
    "ordering_from_labeling",
    "satisfies_endpoint_condition",
    "verify",
]
