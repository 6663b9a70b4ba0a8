"""Discrete affine moving-frame invariants and exact fractal-curve codecs."""

from .equivalence import (
    AffineWitness,
    EquivalenceReport,
    are_equivalent,
    profiles_equal,
    recover_affine_map,
)
from .families import FamilySpec, code_string, generate, point_count
from .frame import (
    AdmissibilityError,
    DegenerateInputError,
    DiscreteCurve,
    InvariantProfile,
    ProfileEntry,
    apply_affine,
    edge_tangents,
    embed_planar,
    inverse_step,
    planar_curvatures,
    reconstruct_from_profile,
    reconstruct_planar,
    reconstruct_space,
    reverse_curve,
    space_invariants,
)
from .hilbert import (
    classify_index,
    expand_word,
    extend_space_hilbert,
    generate_hilbert,
    hilbert_kappa_sequence,
    inflection_count,
    letter_counts,
    parity_step_kappas,
)
from .koch import (
    generate_koch,
    is_sharp_element,
    koch_code,
    koch_counts,
    sharp_point_positions,
    standard_koch_init,
)
from .snowflake import (
    ClosureError,
    generate_snowflake,
    snowflake_code,
    snowflake_one_positions,
    snowflake_sharp_positions,
)

__version__ = "0.1.0"
