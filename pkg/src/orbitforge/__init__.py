"""Orbit structure of companion-matrix actions on F_q x F_q.

Exact finite-field arithmetic, analytic orbit-spectrum predictions with
a brute-force enumeration oracle, Lucas primitive root machinery, and a
deterministic batch CLI.
"""

from .errors import OrbitforgeError
from .fields import (
    DistinctSplit,
    FieldDescriptor,
    FieldElement,
    Irreducible,
    QuadraticExtension,
    Repeated,
    enumerate_units,
    factor_integer,
    is_prime,
    is_prime_power,
    make_field,
    multiplicative_order,
    quadratic_roots,
)
from .lucas import (
    LprReport,
    a_from_gamma,
    conjugate_root,
    enumerate_lpr_as,
    lpr_status,
    lpr_upper_bound_check,
    sophie_germain_a,
)
from .orbits import (
    BasisCase,
    Companion,
    OrbitSpectrum,
    VectorClass,
    VerificationReport,
    check_divisibility,
    classify,
    classify_vector,
    enumerate_spectrum,
    irreducible_length_bound,
    orbit_length_of,
    predict_spectrum,
    primitive_root_census,
    root_orders,
    step,
    verify,
)
from .orders import (
    PartnerPrediction,
    crt_exponent_split,
    order_of_power,
    partner_order_prime,
    partner_order_prime_power,
    power_keeps_p,
    three_length_construction,
    vp,
)

__version__ = "0.1.0"
