"""Eccentricity matrices of graphs: exact spectra, inertia, graph
families, a structural classifier for "exactly one positive eccentricity
eigenvalue", and exhaustive verification on small graphs."""

from .classifier import (
    StarDecomposition,
    admissible_typings,
    decompose_as_star_extension,
    has_exactly_one_positive,
    predicted_one_positive,
    typing_satisfies_characterization,
)
from .eccentricity import check_diam2_identity, eccentricity_matrix
from .enumeration import canonical_form, connected_census, enumerate_connected
from .errors import (
    DisconnectedGraph,
    EccmatError,
    InvalidParameters,
    InvalidPartition,
    MalformedGraph6,
    NonConvergence,
    NotEquitable,
    NotSymmetric,
    SizeLimitExceeded,
    UnsupportedShape,
)
from .exact import Inertia, char_poly, format_poly, inertia, poly_divide, squarefree_part
from .families import (
    are_isomorphic,
    closed_form_char_poly_s2,
    closed_form_char_poly_s3,
    complete,
    complete_bipartite,
    complete_multipartite,
    complete_split,
    construct_named,
    kite,
    mixed_extension_star,
    pineapple,
    star,
    windmill,
)
from .graph6 import parse_graph6, to_graph6
from .graphs import (
    UNREACHABLE,
    EccentricityProfile,
    Graph,
    complement,
    cone,
    distance_matrix,
    eccentricity_profile,
    is_connected,
    is_self_centered,
    universal_vertices,
)
from .numeric import eigenvalues_symmetric, group_multiplicities, sign_counts
from .partitions import (
    QuotientMatrix,
    coarsest_equitable_refinement,
    is_equitable,
    quotient_matrix,
    spectrum_containment_holds,
)
from .verify import VerificationReport, run_check

__version__ = "0.1.0"
