"""Fixed circles of multivalued F-contractions on finite metric spaces."""

from .circles import (
    CircleVerdict,
    RadiusResult,
    TheoremReport,
    compute_r,
    enumerate_fixed_circles,
    verify_fixed_circle,
    verify_fixed_disc,
    verify_theorem,
    verify_theorem_ciric,
    verify_theorem_fc,
    verify_theorem_integral_ciric,
    verify_theorem_integral_fc,
)
from .contractions import (
    CLASSES,
    ContractionVerdict,
    MultivaluedMap,
    check,
    check_ciric_fc,
    check_fc,
    check_integral_ciric,
    check_integral_fc,
    ciric_M,
    displacement,
    max_tau,
    max_tau_ciric,
    max_tau_fc,
    search_witness,
    zero_displacement_iff_member,
)
from .errors import (
    DomainError,
    FixCircleError,
    MetricAxiomError,
    ParameterError,
    RangeError,
    SchemaError,
)
from .instances import (
    Instance,
    builtin_instance,
    example1,
    example2,
    example3,
    load_instance,
    parse_instance,
)
from .metric import (
    Circle,
    ComplexSpace,
    MatrixSpace,
    PointSet,
    circle_of,
    disc_of,
    hausdorff,
    point_set,
    point_set_distance,
    validate_metric,
)
from .quadrature import IntegralPhi, adaptive_simpson, integral_Phi
from .wardowski import BUILTINS, LN, FFunction, ProbeConfig, F_by_name, eval_F, validate_F

__version__ = "0.1.0"
