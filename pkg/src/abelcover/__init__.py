"""Exact invariants and Lyapunov spectra of abelian square-tiled surfaces.

An abelian cover of the sphere branched over four points is named by a
presentation (N, A). From it we compute the degree, genus, stratum and
holonomy, the eigenspace decomposition of H^1, and the full nonnegative
Lyapunov spectrum, all in exact rationals. A floating-point oracle checks
the hypergeometric side numerically.
"""

from .errors import (
    AbelCoverError,
    DomainError,
    EligibilityError,
    EmptyMatrixError,
    InvalidModulusError,
    LogarithmicCase,
    NonConvergenceError,
    ParameterError,
    SizeCapError,
    ValidationError,
)
from .flat import (
    genus,
    has_trivial_holonomy,
    holonomy_cover,
    ramification_orders,
    stratum,
)
from .hodge import (
    EigenRecord,
    Spectrum,
    eigen_dims,
    eigen_table,
    exponent,
    hgde_params,
    spectrum,
    t_values,
    triangle_angles,
)
from .modspan import (
    ResidueVector,
    Subgroup,
    element_order,
    reduce_vector,
    scale_embed,
    span_closure,
)
from .origami import build_model, euler_characteristic, export, vertex_cycles
from .presentation import (
    M,
    Presentation,
    column_span,
    covers,
    degree,
    isomorphic,
    row_span,
    validate,
)

__version__ = "0.1.0"
