"""Contingency logic workbench.

Neighborhood models for the noncontingency operator, bounded countermodel
search over frame classes, supplementation/complementation transforms, the
Box-language translation and a Hilbert-style derivation checker.
"""

from ._core import (
    DEFAULT_SEED,
    BoundExceeded,
    CheckResult,
    DerivationFormatError,
    Formula,
    FormulaSyntaxError,
    Model,
    ModelFormatError,
    SearchReport,
    UnknownState,
    check_derivation,
    find_countermodel,
    fixture_names,
    fixture_suite,
    fixture_text,
    frame_count,
    instantiate,
    is_tautology_instance,
    lattice_edges,
    load_model,
    parse,
    schema_names,
    schema_pattern,
    star_translate,
    system_names,
    system_schemas,
)

__all__ = [
    "DEFAULT_SEED",
    "BoundExceeded",
    "CheckResult",
    "DerivationFormatError",
    "Formula",
    "FormulaSyntaxError",
    "Model",
    "ModelFormatError",
    "SearchReport",
    "UnknownState",
    "check_derivation",
    "find_countermodel",
    "fixture_names",
    "fixture_suite",
    "fixture_text",
    "frame_count",
    "instantiate",
    "is_tautology_instance",
    "lattice_edges",
    "load_model",
    "parse",
    "schema_names",
    "schema_pattern",
    "star_translate",
    "system_names",
    "system_schemas",
]
