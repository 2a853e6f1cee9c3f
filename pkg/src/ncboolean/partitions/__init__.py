"""Partition lattices, nesting structure, block projections and ac-friendly partitions."""
from .base import Classification, Coloring, Partition, SignedTuple, classify, join, leq, meet
from .enumeration import (
    count_nc,
    enumerate_interval,
    enumerate_nc,
    enumerate_nc_colored,
    iter_interval_cuts,
    iter_nc_labels,
)
from .kreweras import kreweras, kreweras_permutation
from .nesting import (
    MAX_ACF,
    OuterData,
    block_depth,
    calt,
    depth,
    enumerate_ac_friendly,
    is_ac_friendly,
    iter_ac_friendly_labels,
    nesting,
    oddtuple,
    outer_data,
    parent,
)
from .projections import (
    BlockProjection,
    has_vnrp,
    ll_leq,
    partition_from_projection,
    projection_from_coarsening,
    projection_from_marked,
    special_blocks,
    vnrp_majorant,
)

__all__ = [
    "MAX_ACF",
    "BlockProjection", "Classification", "Coloring", "OuterData", "Partition", "SignedTuple",
    "block_depth", "calt", "classify", "count_nc", "depth", "enumerate_ac_friendly",
    "enumerate_interval", "enumerate_nc", "enumerate_nc_colored", "has_vnrp",
    "is_ac_friendly", "iter_ac_friendly_labels", "iter_interval_cuts", "iter_nc_labels",
    "join", "kreweras", "kreweras_permutation", "leq", "ll_leq", "meet", "nesting",
    "oddtuple", "outer_data", "parent", "partition_from_projection",
    "projection_from_coarsening", "projection_from_marked", "special_blocks",
    "vnrp_majorant",
]
