"""Strongly Rayleigh measures, mixed characteristic polynomials and thin trees."""

from .barrier import BarrierProbe, BoundReport, above_roots_probe, bound_report, phi_psi, replay
from .charpoly import (
    MixedCharPoly,
    SubsetCertificate,
    descend,
    ksr_partition,
    main_certificate,
    mixed_closed_form,
    mixed_enum,
    mixed_operator,
    verify_identity,
)
from .errors import RayleighError
from .graphlab import WeightedGraph, ThinnessCertificate, edge_vectors, thin_tree_pipeline
from .maxent import BasisPolytopePoint, MaxEntModel, fit_lambda, interior_point
from .measures import SubsetDistribution, condition, marginal, marginals, product_lift
from .stablepoly import UnivariatePoly, VectorSystem

__version__ = "0.1.0"

__all__ = [
    "BarrierProbe",
    "BasisPolytopePoint",
    "BoundReport",
    "MaxEntModel",
    "MixedCharPoly",
    "RayleighError",
    "SubsetCertificate",
    "SubsetDistribution",
    "ThinnessCertificate",
    "UnivariatePoly",
    "VectorSystem",
    "WeightedGraph",
    "above_roots_probe",
    "bound_report",
    "condition",
    "descend",
    "edge_vectors",
    "fit_lambda",
    "interior_point",
    "ksr_partition",
    "main_certificate",
    "marginal",
    "marginals",
    "mixed_closed_form",
    "mixed_enum",
    "mixed_operator",
    "phi_psi",
    "product_lift",
    "replay",
    "thin_tree_pipeline",
    "verify_identity",
]
