"""Enumeration, equivalence classes, the family catalog and bounded verification."""

from .catalog import CATALOG, FAMILIES, CatalogError, catalog_pair, get_family
from .enumeration import compositions, enumerate_homeomorphs, raw_count
from .search import (
    SearchBudgetExceeded,
    equivalence_classes,
    verify_families,
    verify_theorem,
    verify_uniqueness,
)

__all__ = [
    "CATALOG",
    "FAMILIES",
    "CatalogError",
    "catalog_pair",
    "get_family",
    "compositions",
    "enumerate_homeomorphs",
    "raw_count",
    "SearchBudgetExceeded",
    "equivalence_classes",
    "verify_families",
    "verify_theorem",
    "verify_uniqueness",
]
