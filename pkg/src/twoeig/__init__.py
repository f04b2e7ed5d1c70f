"""Exact tools for graphs whose adjacency spectrum has at most two eigenvalues
other than 1 and -1."""

from .catalog import CatalogEntry, catalog, scan_forbidden, validate_catalog
from .charpoly import char_poly_matrix
from .classifier import (
    ClassificationReport,
    CospectralPair,
    DsStatus,
    check_structure_rules,
    cospectral_mate_pairs,
    ds_status,
    pairwise_distinct_spectra,
    verify_classification,
)
from .equitable import (
    Partition,
    coarsest_equitable_refinement,
    is_equitable,
    parse_partition,
    quotient_matrix,
    verify_quotient_divides,
)
from .errors import CapacityError, ConsistencyError, ContractViolation
from .families import (
    FamilySpec,
    construct,
    enumerate_instances,
    expected_certificate,
    expected_spectrum,
    friendship,
    parse_family_spec,
    printed_partition,
    verify_family,
)
from .generate import enumerate_graphs
from .graph import Graph, VertexSet, add_isolated_edges, disjoint_union
from .graph6 import decode as from_graph6, encode as to_graph6
from .iso import are_isomorphic, canonical_form, contains_induced
from .spectra import (
    Classification,
    SpectrumSummary,
    TwoEigCertificate,
    approx_root,
    char_poly,
    classify_spectrum,
    count_roots_above,
    count_roots_with_multiplicity,
    in_class_G,
    psd_rank_check,
    strip_pm_one,
)

__version__ = "0.1.0"
