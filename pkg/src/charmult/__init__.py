"""Exact character-degree multiplicities for symmetric, alternating and other
simple groups, equal-hook partition families, and representation growth of
products of alternating groups."""

__version__ = "0.1.0"

from .census import (
    DegreeCensus,
    alternating_census,
    degree,
    degree_factorization,
    hardy_ramanujan_estimate,
    max_multiplicity,
    symmetric_census,
)
from .envelope import (
    IterateParameters,
    WitnessFamily,
    bound_N,
    envelope,
    envelope_incremented,
    family,
    iterate_parameters,
    witness_for,
)
from .growth import (
    BoundCurve,
    GrowthSeries,
    ProductGroupSpec,
    ScaledInteger,
    R_at,
    bound_curve_value,
    degree_series,
    k_alternating,
    make_product_spec,
    r_at,
    slow_growth_sequence,
)
from .partitions import (
    HookKey,
    Partition,
    conjugate,
    count_partitions,
    count_self_conjugate,
    enumerate_partitions,
    hook_multiset,
    make_partition,
    seed_partition,
    t_sum,
)
from .tables import (
    classical_lower_bound,
    classical_order_estimate,
    euler_totient,
    exceptional_multiplicity,
    growth_indicator,
    sporadic_multiplicity,
)
