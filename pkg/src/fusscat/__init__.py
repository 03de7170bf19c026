"""Planar set partitions, Fuss-Catalan counts and the bijections between them."""

from .partition import (
    Arc,
    PartitionError,
    SetPartition,
    box_count,
    comb_partition,
    contract,
    from_blocks,
    identity,
    is_noncrossing,
    is_refinement,
    nc_join,
    parse,
    serialize,
    standard_arcs,
)
from .numbers import Triangle, binomial, fuss_catalan, t_entry, triangle, triangle_row
from .enumerate import (
    PartitionChain,
    box_histogram,
    enum_chains,
    enum_double,
    enum_multiple,
    enum_mtuple_p,
    enum_nc,
    enum_nc_p,
    parse_chain,
    serialize_chain,
)

__version__ = "0.1.0"
