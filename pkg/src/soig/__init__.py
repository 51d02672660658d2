"""Sphere-of-influence graphs and a mechanical verifier for the
14.5n edge bound.

The library has two halves.  `geometry` builds closed/open
sphere-of-influence graphs from planar point sets and their weighted
digraph, whose per-vertex out-weight the bound is really about.  `bounds`,
`arrangements` and `proofcheck` mechanically verify the case-analysis
certificate that no out-weight can exceed 14.5 at threshold p = 1.409,
and sweep the threshold to show how sharp that choice is.
"""

from .bounds import (
    CERT_EPSILON_DEG,
    AngleDeg,
    Annulus,
    Params,
    PolarPoint,
    capacity_bound,
    pair_angle_bound,
    phi,
    radial_project,
)
from .arrangements import (
    ArrangementCertificate,
    Certification,
    Composition,
    PointClass,
    certify_impossible,
    enumerate_compositions,
    min_sum_general,
    min_sum_two_class,
)
from .geometry import (
    InfluenceGraph,
    PointSet,
    WeightedDigraph,
    build_sig,
    hex_lattice,
    nn_radii,
    out_weight_profile,
    random_points,
    wsig,
)
from .proofcheck import (
    ChainStep,
    ClaimSpec,
    ClassSpec,
    Derivation,
    VerificationReport,
    coverage_check,
    sweep_p,
    verify_claim,
    verify_proof,
)
from .builtin_script import IMPOSSIBLE_PAIRS, builtin_script

__version__ = "0.1.0"

__all__ = [
    "AngleDeg",
    "Annulus",
    "ArrangementCertificate",
    "CERT_EPSILON_DEG",
    "Certification",
    "ChainStep",
    "ClaimSpec",
    "ClassSpec",
    "Composition",
    "Derivation",
    "IMPOSSIBLE_PAIRS",
    "InfluenceGraph",
    "Params",
    "PointClass",
    "PointSet",
    "PolarPoint",
    "VerificationReport",
    "WeightedDigraph",
    "build_sig",
    "builtin_script",
    "capacity_bound",
    "certify_impossible",
    "coverage_check",
    "enumerate_compositions",
    "hex_lattice",
    "min_sum_general",
    "min_sum_two_class",
    "nn_radii",
    "out_weight_profile",
    "pair_angle_bound",
    "phi",
    "radial_project",
    "random_points",
    "sweep_p",
    "verify_claim",
    "verify_proof",
    "wsig",
]
