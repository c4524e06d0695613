"""Boundary minimality for right-angled Coxeter systems.

Word problem via ShortLex normal forms, descent sets and Cayley balls,
irreducible decomposition, and constructive quasi-density witnesses
certified on finite balls.
"""

__version__ = "0.1.0"

from ._accel import BACKEND
from .core import (
    CoxeterPresentation,
    PresentationError,
    distance,
    equal,
    invert,
    length,
    multiply,
    order_product,
    reduce,
)
from .descent import (
    Ball,
    BallCapExceeded,
    Dense,
    NotSphericalError,
    NotWithin,
    ball,
    coset_longest_rep,
    coset_min_rep,
    elements_with_descent,
    left_descents,
    quasi_dense_check,
    right_descents,
)
from .structure import (
    Decomposition,
    MinimalityVerdict,
    boundary_minimal,
    irreducible_components,
    is_infinite,
    is_spherical,
    maximal_spherical_subsets,
    parabolic_orbit_dense,
)
from .witness import (
    FiniteGroup,
    Hole,
    QuasiDensityWitness,
    Splitting,
    WitnessError,
    apply_step,
    certify_witness,
    find_hole,
    find_witness,
)
