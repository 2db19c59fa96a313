"""Exact-arithmetic construction, order by order in a formal parameter, of
associativity constraints, the twists trivializing them, and braided pairs,
for universal enveloping algebras given by structure constants, together
with an independent verifier for every identity involved.
"""

from .errors import (
    DegreeCapError,
    HopfDeformError,
    InternalAssertionError,
    ObstructionError,
    PreconditionError,
    SchemaError,
    VerificationError,
)
from .lie import (
    LieAlgebra,
    cartan_involution,
    dj_r_matrix,
    killing_form,
    load_lie_algebra,
)
from .uea import UEElem, ad_action, antipode, coproduct, counit, multiply, weight
from .wedge import WedgeElem
from .tensor import TensorPoly, casimir_tensor, embed_wedge, extract_wedge
from .hseries import (
    HSeries,
    antipode_legs,
    coproduct_insert,
    flip_h,
    leg_map,
    series_exp,
    series_inverse,
    series_mul,
    tau,
    theta_legs,
)
from .schouten import (
    ce_differential,
    dual_bracket,
    h3_invariant_test,
    schouten,
    yang_baxter,
    yb_polarized,
)
from .cohomology import (
    SolveReport,
    alt,
    delta,
    delta_prime,
    restrict_sector,
    solve_cobounding,
)
from .identities import (
    deformed_coproduct,
    gauge_act,
    hexagon_defects,
    pent,
    twist_defect,
    twisted_antipode_element,
)
from .solvers import (
    AssociatorCertificate,
    QTCertificate,
    TwistCertificate,
    associator_for_twist,
    gauge_equivalent,
    solve_pentagon,
    solve_quasitriangular,
    solve_twist,
)
from .verify import verify_certificate

__version__ = "0.1.0"

__all__ = [
    "AssociatorCertificate",
    "DegreeCapError",
    "HSeries",
    "HopfDeformError",
    "InternalAssertionError",
    "LieAlgebra",
    "ObstructionError",
    "PreconditionError",
    "QTCertificate",
    "SchemaError",
    "SolveReport",
    "TensorPoly",
    "TwistCertificate",
    "UEElem",
    "VerificationError",
    "WedgeElem",
    "ad_action",
    "alt",
    "antipode",
    "antipode_legs",
    "associator_for_twist",
    "cartan_involution",
    "casimir_tensor",
    "ce_differential",
    "coproduct",
    "coproduct_insert",
    "counit",
    "deformed_coproduct",
    "delta",
    "delta_prime",
    "dj_r_matrix",
    "dual_bracket",
    "embed_wedge",
    "extract_wedge",
    "flip_h",
    "gauge_act",
    "gauge_equivalent",
    "h3_invariant_test",
    "hexagon_defects",
    "killing_form",
    "leg_map",
    "load_lie_algebra",
    "multiply",
    "pent",
    "restrict_sector",
    "schouten",
    "series_exp",
    "series_inverse",
    "series_mul",
    "solve_cobounding",
    "solve_pentagon",
    "solve_quasitriangular",
    "solve_twist",
    "tau",
    "theta_legs",
    "twist_defect",
    "twisted_antipode_element",
    "verify_certificate",
    "weight",
    "yang_baxter",
    "yb_polarized",
]
