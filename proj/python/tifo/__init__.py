"""Temporal analytics for fan-community emotion series.

Thin Python surface over the C++ core: inter-event burstiness/memory
statistics, DTW distances and clustering, least squares, and
deterministic point-process simulators.
"""

from tifo._core import (
    TifoError,
    burstiness,
    burstiness_finite,
    coefficient_of_variation,
    cut_dendrogram,
    delta_rank,
    dtw_distance,
    finite_size_burstiness,
    fit_ols,
    hierarchical_cluster,
    kmeans_dtw,
    memory,
    pairwise_distances,
    partition_into_k,
    simulate_events,
)

__all__ = [
    "TifoError",
    "burstiness",
    "burstiness_finite",
    "coefficient_of_variation",
    "cut_dendrogram",
    "delta_rank",
    "dtw_distance",
    "finite_size_burstiness",
    "fit_ols",
    "hierarchical_cluster",
    "kmeans_dtw",
    "memory",
    "pairwise_distances",
    "partition_into_k",
    "simulate_events",
]

__version__ = "1.0.0"
