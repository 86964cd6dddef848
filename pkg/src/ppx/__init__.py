"""Exact power product expansions of the exponential and q-exponential.

Every unit formal power series factors uniquely as prod (1 + g_n x^n); this
package computes those factors exactly for exp(x), exp(-x), exp_q(x), and
Exp_q(x), together with the integer and polynomial sequences they generate
(e_n, c_n, a_n, u_n, r_n and their q-analogs), Pascal-matrix factorizations,
cyclotomic and mod-q^2 specializations, and machine checks of the attached
congruences, inequalities, and divisibility laws.  All arithmetic is exact:
big integers, reduced rationals, integer polynomials, reduced rational
functions, and quotient rings; there is no floating point anywhere.

The ``ppx`` command line exposes the sequences (``ppx seq``), the
verification suites (``ppx verify``), and the matrices (``ppx pascal``).
"""

from .products import ProductExpansion, contract, expand
from .rings import (
    ConsistencyError,
    InexactDivisionError,
    IntPoly,
    ModInt,
    QuotientElem,
    QuotientRing,
    RatFunc,
    cyclotomic,
    poly_gcd,
    quotient_reduce,
)
from .sequences import a_seq, c_seq, e_seq, exp_table, gcd_u_r, r_seq, u_seq
from .series import TruncatedSeries
from .qsequences import (
    c_q_seq,
    cap_e_q_seq,
    e_q_seq,
    qbinom,
    qexp_table,
    qfact,
    qint,
    r_q_seq,
    u_q_seq,
)
from .pascal import (
    SquareMatrix,
    factor_pascal,
    factor_pascal_m,
    factor_q_pascal,
    h_matrix,
    h_m_nk,
    h_nk,
    pascal_m,
    pascal_matrix,
    q_h,
    q_h_nk,
    q_pascal,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "InexactDivisionError",
    "IntPoly",
    "ModInt",
    "ProductExpansion",
    "QuotientElem",
    "QuotientRing",
    "RatFunc",
    "SquareMatrix",
    "TruncatedSeries",
    "a_seq",
    "c_q_seq",
    "c_seq",
    "cap_e_q_seq",
    "contract",
    "cyclotomic",
    "e_q_seq",
    "e_seq",
    "expand",
    "exp_table",
    "factor_pascal",
    "factor_pascal_m",
    "factor_q_pascal",
    "gcd_u_r",
    "h_matrix",
    "h_m_nk",
    "h_nk",
    "pascal_m",
    "pascal_matrix",
    "poly_gcd",
    "q_h",
    "q_h_nk",
    "q_pascal",
    "qbinom",
    "qexp_table",
    "qfact",
    "qint",
    "quotient_reduce",
    "r_q_seq",
    "r_seq",
    "u_q_seq",
    "u_seq",
    "__version__",
]
