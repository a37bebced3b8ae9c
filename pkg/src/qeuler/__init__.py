"""q-Euler numbers and polynomials, their zeta/l-functions, and p-adic interpolation."""

from .cyclotomic import CyclotomicRational, cyclotomic_polynomial, cyclotomic_reduce
from .padic import Padic, PrecisionLossError, padic_from_rational, teichmuller_lift
from .scalars import QParameter, gen_binomial, q_bracket
from .euler import (
    QEulerTable,
    check_translation_identity,
    classical_euler,
    euler_number_q,
    euler_poly_q,
    gen_euler_number,
)
from .characters import (
    DirichletCharacter,
    EmbeddedCharacter,
    EmbeddingError,
    OmegaTwist,
    char_value,
    conductor,
    embed_cyclotomic,
    enumerate_characters,
    primitive_part,
    trivial_character,
    twist_by_omega,
)

__version__ = "0.1.0"
