"""Planar book-embedding toolkit.

Thin text-based bindings over the C++ core: gadget-family generation, CNF
encoding of p-page embedding questions, SAT-backend orchestration and
independent embedding validation/analysis.
"""

from ._bookemb import (
    ToolkitError,
    encode,
    extract_pattern,
    forbidden_scan,
    gadget,
    graph_stats,
    solve,
    verify,
)

__all__ = [
    "ToolkitError",
    "encode",
    "extract_pattern",
    "forbidden_scan",
    "gadget",
    "graph_stats",
    "solve",
    "verify",
]
