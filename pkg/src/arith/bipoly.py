"""
Dense Bivariate Polynomials over F_p

BiPoly keeps a (deg_x+1) x (deg_y+1) grid of residues, row i holding the
coefficients of x^i. Products use Kronecker substitution
y -> x^(deg_x(u)+deg_x(v)+1) and a single univariate multiplication.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple, Union
import logging

from src.errors import InvalidInput
from .field import Fp, PrimeField
from .poly import DEG_ZERO, Degree, UniPoly, mul_coeffs

logger = logging.getLogger(__name__)

Grid = Tuple[Tuple[int, ...], ...]


def _normalize(rows: List[List[int]], p: int) -> Grid:
    rows = [[c % p for c in row] for row in rows]
    while rows and not any(rows[-1]):
        rows.pop()
    if not rows:
        return ()
    width = max(len(row) for row in rows)
    rows = [row + [0] * (width - len(row)) for row in rows]
    while width and not any(row[width - 1] for row in rows):
        width -= 1
    return tuple(tuple(row[:width]) for row in rows)


@dataclass(frozen=True, eq=False)
class BiPoly:
    """
    Polynomial in F_p[x, y] on a dense grid.

    ``grid[i][j]`` is the coefficient of x^i y^j. Partial degrees are the
    grid dimensions minus one; the last row and last column each contain a
    nonzero entry unless the polynomial is zero.
    """

    field: PrimeField
    grid: Grid = ()

    def __post_init__(self):
        object.__setattr__(self, "grid", _normalize([list(r) for r in self.grid], self.field.p))

    # ----------------------------------------------------------------- builders

    @classmethod
    def zero(cls, fld: PrimeField) -> "BiPoly":
        return cls(fld, ())

    @classmethod
    def constant(cls, fld: PrimeField, value: int) -> "BiPoly":
        return cls(fld, ((value,),))

    @classmethod
    def from_terms(cls, fld: PrimeField, terms: Dict[Tuple[int, int], int]) -> "BiPoly":
        """Build from an {(i, j): coefficient} mapping."""
        if not terms:
            return cls.zero(fld)
        for i, j in terms:
            if i < 0 or j < 0:
                raise InvalidInput(f"negative exponent in term x^{i} y^{j}")
        dx = max(i for i, _ in terms)
        dy = max(j for _, j in terms)
        rows = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            rows[i][j] += c
        return cls(fld, tuple(tuple(r) for r in rows))

    @classmethod
    def from_y_coeffs(cls, fld: PrimeField, coeffs: Sequence[UniPoly]) -> "BiPoly":
        """Build sum_j coeffs[j](x) y^j."""
        dx = max((len(c.coeffs) for c in coeffs), default=0)
        rows = [[c[i] for c in coeffs] for i in range(dx)]
        return cls(fld, tuple(tuple(r) for r in rows))

    # --------------------------------------------------------------- inspection

    @property
    def deg_x(self) -> Degree:
        return len(self.grid) - 1 if self.grid else DEG_ZERO

    @property
    def deg_y(self) -> Degree:
        return len(self.grid[0]) - 1 if self.grid else DEG_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.grid

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[0]):
            return self.grid[i][j]
        return 0

    def coefficient(self, i: int, j: int) -> Fp:
        return Fp(self[i, j], self.field)

    def terms(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero terms as (i, j, coefficient)."""
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def y_coeffs(self) -> List[UniPoly]:
        """The x-polynomials e_j(x) with self = sum_j e_j(x) y^j."""
        if self.is_zero:
            return []
        return [
            UniPoly._raw(self.field, [row[j] for row in self.grid])
            for j in range(len(self.grid[0]))
        ]

    def at_origin(self) -> int:
        return self[0, 0]

    def diagonal(self) -> UniPoly:
        """sum_i c_{i,i} x^i."""
        n = min(len(self.grid), len(self.grid[0])) if self.grid else 0
        return UniPoly._raw(self.field, [self.grid[i][i] for i in range(n)])

    # ---------------------------------------------------------------- arithmetic

    def _check(self, other: "BiPoly") -> None:
        if other.field != self.field:
            raise InvalidInput(f"mixing {self.field} and {other.field}")

    def _combine(self, other: "BiPoly", sign: int) -> "BiPoly":
        self._check(other)
        rows = max(len(self.grid), len(other.grid))
        cols = max(len(self.grid[0]) if self.grid else 0, len(other.grid[0]) if other.grid else 0)
        out = [
            [self[i, j] + sign * other[i, j] for j in range(cols)]
            for i in range(rows)
        ]
        return BiPoly(self.field, tuple(tuple(r) for r in out))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self._combine(other, -1)

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.field, tuple(tuple(-c for c in row) for row in self.grid))

    def scale(self, c: int) -> "BiPoly":
        return BiPoly(self.field, tuple(tuple(x * c for x in row) for row in self.grid))

    def __mul__(self, other: Union["BiPoly", int]) -> "BiPoly":
        if isinstance(other, int):
            return self.scale(other)
        return bipoly_mul(self, other)

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise InvalidInput("negative polynomial power")
        result = BiPoly.constant(self.field, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = bipoly_mul(result, base)
            exponent >>= 1
            if exponent:
                base = bipoly_mul(base, base)
        return result

    def derivative_y(self) -> "BiPoly":
        return BiPoly(
            self.field,
            tuple(tuple(j * row[j] for j in range(1, len(row))) for row in self.grid),
        )

    def shear(self) -> "BiPoly":
        """Substitute x -> x*y: x^i y^j becomes x^i y^(i+j)."""
        if self.is_zero:
            return self
        width = len(self.grid) + len(self.grid[0]) - 1
        rows = []
        for i, row in enumerate(self.grid):
            rows.append((0,) * i + row + (0,) * (width - i - len(row)))
        return BiPoly(self.field, tuple(rows))

    def mul_y(self, k: int = 1) -> "BiPoly":
        return BiPoly(self.field, tuple((0,) * k + row for row in self.grid))

    def div_y(self) -> "BiPoly":
        """Exact division by y."""
        if any(row[0] for row in self.grid):
            raise InvalidInput("polynomial is not divisible by y")
        return BiPoly(self.field, tuple(row[1:] for row in self.grid))

    def eval_y(self, series: UniPoly, n: int) -> UniPoly:
        """self(x, series) mod x^n by Horner's rule in y."""
        acc = UniPoly.zero(self.field)
        for e_j in reversed(self.y_coeffs()):
            acc = acc.mul_trunc(series, n) + e_j.truncate(n)
        return acc.truncate(n)

    # -------------------------------------------------------------- comparisons

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.grid == other.grid

    def __hash__(self) -> int:
        return hash((self.field.p, self.grid))

    def __repr__(self) -> str:
        return f"BiPoly({self}, {self.field})"

    def __str__(self) -> str:
        terms = sorted(self.terms(), key=lambda t: (t[0] + t[1], -t[0]))
        if not terms:
            return "0"
        parts = []
        for i, j, c in terms:
            c = self.field.signed(c)
            mono = "*".join(
                m for m in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if m
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def bipoly_mul(u: BiPoly, v: BiPoly) -> BiPoly:
    """
    Exact product via Kronecker substitution.

    Packs y^j into x^(j*W) with W = deg_x(u) + deg_x(v) + 1, multiplies the
    two univariate images, and unpacks.
    """
    u._check(v)
    if u.is_zero or v.is_zero:
        return BiPoly.zero(u.field)
    width = len(u.grid) + len(v.grid) - 1
    product = mul_coeffs(_kronecker_pack(u, width), _kronecker_pack(v, width), u.field.p)
    dy = len(u.grid[0]) + len(v.grid[0]) - 2
    rows = [[0] * (dy + 1) for _ in range(width)]
    for k, c in enumerate(product):
        if c:
            j, i = divmod(k, width)
            rows[i][j] = c
    return BiPoly(u.field, tuple(tuple(r) for r in rows))


def _kronecker_pack(v: BiPoly, width: int) -> List[int]:
    cols = len(v.grid[0])
    flat = [0] * (cols * width)
    for i, row in enumerate(v.grid):
        for j, c in enumerate(row):
            flat[j * width + i] = c
    return _trim_list(flat)


def _trim_list(values: List[int]) -> List[int]:
    while values and values[-1] == 0:
        values.pop()
    return values
