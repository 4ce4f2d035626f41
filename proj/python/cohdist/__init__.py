"""Coherence / disturbance trade-off numerics (C++ core)."""

from ._core import (  # noqa: F401
    DensityMatrix,
    KrausChannel,
    apply,
    channel,
    check_bipartite_discord,
    check_bipartite_entanglement,
    check_measurement_channel,
    check_single,
    coherence_closed_form,
    coherence_l1,
    coherence_relative_entropy,
    coherent_information,
    disturbance,
    disturbance_ad_closed_form,
    disturbance_ad_closed_form_corrected,
    disturbance_depolarizing_closed_form,
    disturbance_weak_closed_form,
    er_upper_bound_product,
    is_cptp,
    mutual_information,
    quantum_discord,
    random_mixed,
    relative_entropy_entanglement,
    schmidt_state,
    von_neumann_entropy,
)

__all__ = [
    "DensityMatrix",
    "KrausChannel",
    "apply",
    "channel",
    "check_bipartite_discord",
    "check_bipartite_entanglement",
    "check_measurement_channel",
    "check_single",
    "coherence_closed_form",
    "coherence_l1",
    "coherence_relative_entropy",
    "coherent_information",
    "disturbance",
    "disturbance_ad_closed_form",
    "disturbance_ad_closed_form_corrected",
    "disturbance_depolarizing_closed_form",
    "disturbance_weak_closed_form",
    "er_upper_bound_product",
    "is_cptp",
    "mutual_information",
    "quantum_discord",
    "random_mixed",
    "relative_entropy_entanglement",
    "schmidt_state",
    "von_neumann_entropy",
]

__version__ = "1.0.0"
