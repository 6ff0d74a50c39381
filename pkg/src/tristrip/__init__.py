"""Exact tilings of two-row triangular strips by side-1 and side-2 triangles."""

from .engine import (
    Method, TileStats, Tiling, count, count_dfs, count_dp, enumerate_tilings, exact_cover_oracle,
    iter_tilings, stats,
)
from .errors import CapabilityError, ComplexParseError, DomainError, InvariantError
from .lattice import (
    FamilyId, LargePlacement, StripComplex, TriCell, build_family, conflict_graph, large_placements,
    parse_complex, serialize_complex,
)
from .sequences import Route, SeqId, gf_expand, lin_rec, seq_value, seq_value_alt
from .zroot2 import ZRoot2, zpow

__version__ = "0.1.0"

__all__ = [
    "CapabilityError", "ComplexParseError", "DomainError", "FamilyId", "InvariantError",
    "LargePlacement", "Method", "Route", "SeqId", "StripComplex", "TileStats", "Tiling", "TriCell",
    "ZRoot2", "build_family", "conflict_graph", "count", "count_dfs", "count_dp", "enumerate_tilings",
    "exact_cover_oracle", "gf_expand", "iter_tilings", "large_placements", "lin_rec", "parse_complex",
    "seq_value", "seq_value_alt", "serialize_complex", "stats", "zpow",
]
