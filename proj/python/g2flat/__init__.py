"""Exact verification toolkit for seven-dimensional metric nilpotent Lie
algebras and the split exceptional model.

Everything is computed over exact rationals in the C++ core; the python layer
only marshals documents (JSON text) and result dictionaries.
"""

from g2flat._core import (
    analyze,
    catalog_names,
    export_algebra,
    g2_check,
    lowdim_lemma,
    main_theorem,
    obstruction,
    parse_roundtrip,
    rank_classify,
    run,
    search_rank2,
    verify_paper,
)

__all__ = [
    "analyze",
    "catalog_names",
    "export_algebra",
    "g2_check",
    "lowdim_lemma",
    "main_theorem",
    "obstruction",
    "parse_roundtrip",
    "rank_classify",
    "run",
    "search_rank2",
    "verify_paper",
]

__version__ = "0.1.0"
