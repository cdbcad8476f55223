"""
Mahler Equation Derivation

From E(x, y) to a minimal relation sum_k c_k(x) f(x^(p^k)) = 0. The
remainders R_s = y^(p^s) mod E live in a d-dimensional space over F_p(x);
the first linear dependence among R_0, ..., R_s gives the equation.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from src.arith import (
    BiPoly,
    FractionFreeRemainder,
    PrimeField,
    UniPoly,
    upoly_gcd,
    y_power_mod,
    y_squarefree_part,
)
from src.errors import InvalidInput, MahlerDerivationError
from src.models.problem import validate_equation
from src.utils.timing import timed

logger = logging.getLogger(__name__)

Matrix = List[List[UniPoly]]


@dataclass(frozen=True)
class MahlerEquation:
    """
    sum_{k=0}^{K} c_k(x) f(x^(p^k)) = 0.

    Coefficients are primitive as a tuple, with c_K monic.
    """

    field: PrimeField
    coeffs: Tuple[UniPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise InvalidInput("a Mahler equation needs order at least 1")
        if self.coeffs[0].is_zero:
            raise MahlerDerivationError("trailing coefficient c_0 vanished")
        if self.coeffs[-1].is_zero:
            raise MahlerDerivationError("leading coefficient c_K vanished")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    K = order

    @property
    def v0(self) -> int:
        """Valuation of c_0."""
        return int(self.coeffs[0].valuation)

    @property
    def d0(self) -> int:
        """Degree of c_0."""
        return int(self.coeffs[0].degree)

    @property
    def degrees(self) -> List[int]:
        return [int(c.degree) if not c.is_zero else -1 for c in self.coeffs]

    @property
    def monic_state_size(self) -> int:
        """Upper bound on (K+2)(D+1) of the monic form, from the degrees alone."""
        p = self.field.p
        D = max(self.degrees[k] + self.d0 * (p**k - 2) for k in range(1, self.order + 1))
        return (self.order + 2) * (D + 1)

    def residual(self, series: UniPoly, n: int) -> UniPoly:
        """sum_k c_k(x) series(x^(p^k)) mod x^n."""
        p = self.field.p
        total = UniPoly.zero(self.field)
        for k, c in enumerate(self.coeffs):
            total = total + c.mul_trunc(series.truncate(n).inflate(p**k).truncate(n), n)
        return total

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.field.p,
            "order": self.order,
            "coefficients": [str(c) for c in self.coeffs],
            "degrees": self.degrees,
        }


# =============================================================================
# Fraction-free elimination over F_p[x]
# =============================================================================


def fraction_free_echelon(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Bareiss elimination: row echelon form with exact polynomial divisions.

    Returns:
        (echelon matrix, pivot column indices)
    """
    rows = [list(row) for row in matrix]
    if not rows:
        return rows, []
    fld = rows[0][0].field
    nrows, ncols = len(rows), len(rows[0])
    previous = UniPoly.one(fld)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            for j in range(c + 1, ncols):
                rows[i][j] = (rows[i][j] * head - factor * rows[r][j]).exact_div(previous)
            rows[i][c] = UniPoly.zero(fld)
        previous = head
        pivots.append(c)
        r += 1
    return rows, pivots


def matrix_rank(columns: Sequence[Sequence[UniPoly]]) -> int:
    """Rank over F_p(x) of the matrix with the given columns."""
    if not columns:
        return 0
    matrix = [[col[i] for col in columns] for i in range(len(columns[0]))]
    return len(fraction_free_echelon(matrix)[1])


def polynomial_kernel_vector(columns: Sequence[Sequence[UniPoly]]) -> Optional[List[UniPoly]]:
    """
    Polynomial null vector of [col_0 | ... | col_s], assuming the first s
    columns are independent.

    Returns None when all s+1 columns are independent.
    """
    s = len(columns) - 1
    matrix = [[col[i] for col in columns] for i in range(len(columns[0]))]
    echelon, pivots = fraction_free_echelon(matrix)
    if len(pivots) == s + 1:
        return None
    if pivots != list(range(s)):
        raise MahlerDerivationError(f"earlier remainders lost independence (pivots {pivots})")

    fld = columns[0][0].field
    if s == 0:
        return [UniPoly.one(fld)]
    # The last pivot is the leading s x s minor, which clears every denominator
    last = echelon[s - 1][s - 1]
    solution: List[UniPoly] = [UniPoly.zero(fld)] * (s + 1)
    solution[s] = last
    for k in range(s - 1, -1, -1):
        acc = -(last * echelon[k][s])
        for j in range(k + 1, s):
            acc = acc - echelon[k][j] * solution[j]
        solution[k] = acc.exact_div(echelon[k][k])
    return solution


# =============================================================================
# Derivation
# =============================================================================


def frobenius_remainders(E: BiPoly, count: int) -> List[FractionFreeRemainder]:
    """R_0, ..., R_{count-1} with R_s = y^(p^s) mod E, fraction-free."""
    p = E.field.p
    return [y_power_mod(E, p**s) for s in range(count)]


def _normalize(coeffs: List[UniPoly]) -> List[UniPoly]:
    content = UniPoly.zero(coeffs[0].field)
    for c in coeffs:
        if c:
            content = upoly_gcd(content, c)
    if content.degree > 0:
        coeffs = [c // content for c in coeffs]
    inv = coeffs[-1].field.inv(coeffs[-1].leading)
    return [c.scale(inv) for c in coeffs]


@timed
def algeq_to_mahler(E: BiPoly) -> MahlerEquation:
    """
    Derive the minimal-order Mahler equation satisfied by the root of E.

    Works modulo the squarefree part of E in y, so repeated factors of E
    cannot force c_0 = 0. A root that is the zero series gets f - f(x^p) = 0.

    Args:
        E: Equation with E(0,0) = 0, E_y(0,0) != 0 and deg_y E >= 2

    Returns:
        MahlerEquation with primitive coefficients and monic c_K

    Raises:
        InvalidInput: if E violates the preconditions
    """
    validate_equation(E, require_nonlinear=True)
    modulus = y_squarefree_part(E)
    d = int(modulus.deg_y)
    if d < E.deg_y:
        logger.info(f"Reduced E to its squarefree part of y-degree {d}")
    p = E.field.p
    remainders = [y_power_mod(modulus, 1)]
    if all(c.is_zero for c in remainders[0].coeffs):
        one = UniPoly.one(E.field)
        return MahlerEquation(E.field, (-one, one))
    for s in range(1, d + 1):
        remainders.append(y_power_mod(modulus, p**s))
        kernel = polynomial_kernel_vector([rem.coeffs for rem in remainders])
        if kernel is None:
            logger.debug(f"R_0..R_{s} independent")
            continue
        # undo the per-column denominators lc^e_k
        coeffs = [
            c * (rem.leading ** rem.exponent) if rem.exponent else c
            for c, rem in zip(kernel, remainders)
        ]
        equation = MahlerEquation(E.field, tuple(_normalize(coeffs)))
        logger.info(f"Mahler equation of order {equation.order}, degrees {equation.degrees}")
        return equation
    raise MahlerDerivationError(f"no dependence among y^(p^s) mod E for s <= {d}")
