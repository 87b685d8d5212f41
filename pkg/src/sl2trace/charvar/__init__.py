"""Character varieties of F_k, the 2-torus and the genus-2 surface."""

from .epoly import epoly, epoly_consistency, EPOLY_TABLE
from .f3 import discriminant_f3, f3_equation, reducible_locus_f3
from .free import (
    dimension,
    eliminate_tcd_at_point,
    generator_counts,
    jacobian_rank,
    transcendental_basis,
)
from .genus2 import genus2_relations
from .torus import (
    AffinePoint3,
    SingularReport,
    hessian_classify,
    projective_checks,
    singular_points,
    torus_fiber,
)
