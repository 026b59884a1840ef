"""Frobenius additive FFT over Cantor bases.

The package multiplies polynomials over GF(2) by evaluating them at one
representative per Frobenius orbit instead of at every point of an
affine subspace, and it can emit the whole pipeline as a verified
straight-line XOR/AND circuit.

Layering, bottom up:

- ``field``: the Cantor tower GF(2^(2^K)) with elements packed in ints.
- ``subspace``: vanishing polynomials of the spanned subspaces and the
  twiddle constants they induce.
- ``basis``: change of basis between monomial and subspace-product
  coefficients, packed over machine words.
- ``transform``: the recursive reference transforms, cross sections,
  and operation accounting.
- ``engine``: the vectorised layer-by-layer evaluator used for bulk
  multiplication.
- ``mul``: carryless multiplication entry points and baselines.
- ``circuit``: straight-line program generation, parsing, evaluation,
  and verification.
"""

from .basis import (
    ConvTally,
    from_novel,
    from_novel_packed,
    to_novel,
    to_novel_by_division,
    to_novel_packed,
)
from .circuit import (
    Circuit,
    VerifyReport,
    eval_slp,
    gen_mul_circuit,
    parse_slp,
    verify_slp,
)
from .engine import LayeredEngine
from .field import CantorField, binrd, binru
from .mul import mul, mul_fafft, mul_karatsuba, mul_schoolbook
from .subspace import SubspaceCoeffs, TwiddleTable, eval_subspace, subspace_coeffs
from .transform import (
    CrossSectionPoint,
    FaftEngine,
    FaftResult,
    OpCounters,
    count_ops,
    n_cross_section,
)

__version__ = "0.1.0"

__all__ = [
    "CantorField",
    "Circuit",
    "ConvTally",
    "CrossSectionPoint",
    "FaftEngine",
    "FaftResult",
    "LayeredEngine",
    "OpCounters",
    "SubspaceCoeffs",
    "TwiddleTable",
    "VerifyReport",
    "binrd",
    "binru",
    "count_ops",
    "eval_slp",
    "eval_subspace",
    "from_novel",
    "from_novel_packed",
    "gen_mul_circuit",
    "mul",
    "mul_fafft",
    "mul_karatsuba",
    "mul_schoolbook",
    "n_cross_section",
    "parse_slp",
    "subspace_coeffs",
    "to_novel",
    "to_novel_by_division",
    "to_novel_packed",
    "verify_slp",
    "__version__",
]
