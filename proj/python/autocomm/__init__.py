"""Exact autocommuting-probability analysis of small finite groups."""

from ._core import (
    AutocommError,
    Group,
    analyze,
    aut_order,
    automorphisms,
    build,
    distribution,
    isoclinic,
    load_group,
    pr,
    survey,
    survey_rows,
    __version__,
)

__all__ = [
    "AutocommError",
    "Group",
    "analyze",
    "aut_order",
    "automorphisms",
    "build",
    "distribution",
    "isoclinic",
    "load_group",
    "pr",
    "survey",
    "survey_rows",
    "__version__",
]
