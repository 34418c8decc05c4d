"""Exact equivariant holomorphic Euler characteristics of complex contact
manifolds with circle actions, computed from fixed-point weight data, with
an independent characteristic-class cross-check."""

from .laurent import LaurentPoly, Rat, one_minus_z
from .ratfunc import (
    NotPolynomial,
    RationalFn,
    ZeroFunction,
    ord_bounds,
    rf_add,
    rf_to_laurent,
)
from .truncring import TruncElt, TruncRing, ring_exp, ring_integrate
from .contact import (
    ContactFixedData,
    ContactPointDecomp,
    FixedPoint,
    NoContactWeight,
    NonIntegralH,
    NoSigmaPairing,
    NotIsolated,
    ValidationReport,
    Violation,
    decompose,
    infer_h,
    validate,
)
from .characters import (
    EXTERIOR,
    SYM,
    BundleSpec,
    InvalidSpec,
    char_bundle,
    char_exterior,
    char_sym,
)
from .lefschetz import (
    BOUNDED,
    NON_CONSTANT,
    RIGID_NONZERO,
    STRICTLY_VANISHING,
    UNBOUNDED,
    VANISHING,
    EquivariantIndex,
    LimitCertificate,
    NonIntegralCoefficient,
    ScanRow,
    TermLimit,
    certificate,
    equivariant_index,
    point_term,
    scan,
)
from .chern import (
    BundleClassData,
    CohModel,
    NonIntegralResult,
    a_hat,
    ch_from_chern,
    ch_lambda,
    cp_model,
    holomorphic_euler,
    power_sums,
    todd,
)
from .region import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    OutOfRangeP,
    RegionCell,
    cell_status,
    grid_ascii,
    grid_csv,
    k_interval,
    region_grid,
)
from .models import (
    DegenerateWeights,
    ParseError,
    ValidationFailed,
    cp_twistor,
    load_fixture,
    projectivized_cotangent,
    save_fixture,
)

__version__ = "0.1.0"
