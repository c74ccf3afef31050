"""Exact-arithmetic census of twisted-connected-sum 7-manifold invariants
built from the rank 1/2 Fano building-block catalog."""

import os
from pathlib import Path

from ._g2census import (  # noqa: F401
    Catalog,
    CensusError,
    Lattice,
    census_orth,
    census_perp,
    census_skew,
    d_hat,
    det_gram,
    discriminant_group,
    discriminant_group_str,
    exotic_report,
    exotic_text,
    fundamental_min,
    index_of_sublattice,
    is_even,
    load_catalog,
    orth_complement_of_vector,
    prime_index_overlattices,
    signature,
    validate_catalog,
    vectors_with,
)


def default_data_dir() -> str:
    """Locate the shipped dataset: packaged copy, else G2CENSUS_DATA."""
    packaged = Path(__file__).parent / "data"
    if packaged.is_dir():
        return str(packaged)
    env = os.environ.get("G2CENSUS_DATA")
    if env:
        return env
    return "data"


def load_default_catalog() -> Catalog:
    return load_catalog(default_data_dir())
