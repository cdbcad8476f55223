"""
Dense Univariate Polynomials over F_p

UniPoly stores residues in a normalized tuple (no trailing zeros). Products
go through one of three interchangeable kernels selected by size:
schoolbook, Karatsuba, or Kronecker packing into a single Python integer.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union
import logging

from src.errors import CertificateFailure, InvalidInput, NotAUnit
from .field import Fp, PrimeField

logger = logging.getLogger(__name__)

# Degree of the zero polynomial. Compares below every int and absorbs addition.
DEG_ZERO = float("-inf")

Degree = Union[int, float]


# =============================================================================
# Multiplication kernels (lists of residues in, list of residues out)
# =============================================================================


@dataclass
class MultiplicationPolicy:
    """Size thresholds that route a product to a kernel."""

    algorithm: str = "auto"  # auto | schoolbook | karatsuba | packed
    karatsuba_threshold: int = 48  # below this, Karatsuba recursion bottoms out
    packed_threshold: int = 24  # auto switches to Kronecker packing from this length

    def __post_init__(self):
        if self.algorithm not in ("auto", "schoolbook", "karatsuba", "packed"):
            raise ValueError(f"unknown multiplication algorithm: {self.algorithm}")
        if self.karatsuba_threshold < 2:
            raise ValueError("karatsuba_threshold must be at least 2")


_policy = MultiplicationPolicy()


def set_multiplication_policy(policy: MultiplicationPolicy) -> None:
    """Install the process-wide kernel policy (normally once, from config)."""
    global _policy
    _policy = policy
    logger.debug(f"Multiplication policy: {policy}")


def get_multiplication_policy() -> MultiplicationPolicy:
    return _policy


def mul_schoolbook(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Quadratic product with one reduction per output coefficient."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return [c % p for c in out]


def _add_into(dst: List[int], src: Sequence[int], offset: int) -> None:
    for i, c in enumerate(src):
        dst[offset + i] += c


def mul_karatsuba(a: Sequence[int], b: Sequence[int], p: int, threshold: Optional[int] = None) -> List[int]:
    """Karatsuba product; unbalanced operands are cut into balanced blocks."""
    if not a or not b:
        return []
    if threshold is None:
        threshold = _policy.karatsuba_threshold
    if len(a) < len(b):
        a, b = b, a
    if len(b) < threshold:
        return mul_schoolbook(a, b, p)

    if len(a) > 2 * len(b):
        # Split the long operand into len(b)-sized chunks
        out = [0] * (len(a) + len(b) - 1)
        step = len(b)
        for start in range(0, len(a), step):
            _add_into(out, mul_karatsuba(a[start:start + step], b, p, threshold), start)
        return [c % p for c in out]

    m = len(a) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = mul_karatsuba(a0, b0, p, threshold)
    z2 = mul_karatsuba(a1, b1, p, threshold) if b1 else []
    sa = [x + y for x, y in _zip_longest(a0, a1)]
    sb = [x + y for x, y in _zip_longest(b0, b1)]
    z1 = mul_karatsuba(sa, sb, p, threshold)

    out = [0] * (len(a) + len(b) - 1)
    _add_into(out, z0, 0)
    _add_into(out, z2, 2 * m)
    mid = [0] * len(z1)
    _add_into(mid, z1, 0)
    for i, c in enumerate(z0):
        mid[i] -= c
    for i, c in enumerate(z2):
        mid[i] -= c
    _add_into(out, mid[: len(out) - m], m)
    return [c % p for c in out]


def _zip_longest(u: Sequence[int], v: Sequence[int]):
    n = max(len(u), len(v))
    for i in range(n):
        yield (u[i] if i < len(u) else 0, v[i] if i < len(v) else 0)


def _slot_bytes(p: int, shorter: int) -> int:
    bits = 2 * (p - 1).bit_length() + shorter.bit_length() + 1
    return (bits + 7) // 8


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _unpack(value: int, nbytes: int, count: int, p: int) -> List[int]:
    raw = value.to_bytes(nbytes * count, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % p for i in range(count)]


def mul_packed(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Kronecker substitution x -> 2^(8k): one big-integer product."""
    if not a or not b:
        return []
    nbytes = _slot_bytes(p, min(len(a), len(b)))
    count = len(a) + len(b) - 1
    if a is b:
        packed = _pack(a, nbytes)
        product = packed * packed
    else:
        product = _pack(a, nbytes) * _pack(b, nbytes)
    return _unpack(product, nbytes, count, p)


def mul_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Dispatch a residue-list product according to the active policy."""
    if not a or not b:
        return []
    algorithm = _policy.algorithm
    if algorithm == "schoolbook":
        return mul_schoolbook(a, b, p)
    if algorithm == "karatsuba":
        return mul_karatsuba(a, b, p)
    if algorithm == "packed":
        return mul_packed(a, b, p)
    if min(len(a), len(b)) < _policy.packed_threshold:
        return mul_schoolbook(a, b, p)
    return mul_packed(a, b, p)


def _trim(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# =============================================================================
# UniPoly
# =============================================================================


@dataclass(frozen=True, eq=False)
class UniPoly:
    """
    Dense polynomial in F_p[x].

    Index i of ``coeffs`` is the coefficient of x^i. The tuple is always
    normalized, so the zero polynomial is the empty tuple.
    """

    field: PrimeField
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        p = self.field.p
        values = [c % p for c in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(values)))

    # ----------------------------------------------------------------- builders

    @classmethod
    def _raw(cls, fld: PrimeField, coeffs: List[int]) -> "UniPoly":
        """Wrap an already reduced list, trimming only."""
        poly = object.__new__(cls)
        object.__setattr__(poly, "field", fld)
        object.__setattr__(poly, "coeffs", tuple(_trim(coeffs)))
        return poly

    @classmethod
    def zero(cls, fld: PrimeField) -> "UniPoly":
        return cls._raw(fld, [])

    @classmethod
    def one(cls, fld: PrimeField) -> "UniPoly":
        return cls._raw(fld, [1])

    @classmethod
    def constant(cls, fld: PrimeField, value: int) -> "UniPoly":
        return cls(fld, (value,))

    @classmethod
    def monomial(cls, fld: PrimeField, degree: int, coeff: int = 1) -> "UniPoly":
        if degree < 0:
            raise InvalidInput(f"monomial degree must be nonnegative, got {degree}")
        coeff %= fld.p
        if coeff == 0:
            return cls.zero(fld)
        return cls._raw(fld, [0] * degree + [coeff])

    @classmethod
    def from_fp(cls, values: Iterable[Fp]) -> "UniPoly":
        values = list(values)
        if not values:
            raise InvalidInput("cannot infer the field of an empty coefficient list")
        return cls(values[0].field, tuple(v.value for v in values))

    # --------------------------------------------------------------- inspection

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> Degree:
        """Index of the lowest nonzero coefficient (+inf for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return float("inf")

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, index: int) -> int:
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def coefficient(self, index: int) -> Fp:
        return Fp(self[index], self.field)

    def to_fp_list(self) -> List[Fp]:
        return [Fp(c, self.field) for c in self.coeffs]

    # ---------------------------------------------------------------- arithmetic

    def _check(self, other: "UniPoly") -> None:
        if other.field != self.field:
            raise InvalidInput(f"mixing {self.field} and {other.field}")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        p = self.field.p
        return UniPoly._raw(self.field, [c % p for c in out])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        p = self.field.p
        return UniPoly._raw(self.field, [-c % p for c in self.coeffs])

    def __mul__(self, other: Union["UniPoly", int, Fp]) -> "UniPoly":
        if isinstance(other, (int, Fp)):
            return self.scale(int(other))
        self._check(other)
        return UniPoly._raw(self.field, mul_coeffs(self.coeffs, other.coeffs, self.field.p))

    def __rmul__(self, other: Union[int, Fp]) -> "UniPoly":
        return self.scale(int(other))

    def scale(self, c: int) -> "UniPoly":
        p = self.field.p
        c %= p
        if c == 0:
            return UniPoly.zero(self.field)
        if c == 1:
            return self
        return UniPoly._raw(self.field, [x * c % p for x in self.coeffs])

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise InvalidInput("negative polynomial power")
        result = UniPoly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_trunc(self, other: "UniPoly", n: int) -> "UniPoly":
        """Product modulo x^n."""
        return UniPoly._raw(
            self.field, mul_coeffs(self.coeffs[:n], other.coeffs[:n], self.field.p)[:n]
        )

    def truncate(self, n: int) -> "UniPoly":
        """Remainder modulo x^n."""
        return UniPoly._raw(self.field, list(self.coeffs[:max(n, 0)]))

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k (k >= 0) or drop the k lowest terms (k < 0)."""
        if self.is_zero:
            return self
        if k >= 0:
            return UniPoly._raw(self.field, [0] * k + list(self.coeffs))
        return UniPoly._raw(self.field, list(self.coeffs[-k:]))

    def inflate(self, k: int) -> "UniPoly":
        """Substitute x -> x^k."""
        if k == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        out[::k] = self.coeffs
        return UniPoly._raw(self.field, out)

    def reverse(self, length: Optional[int] = None) -> "UniPoly":
        """x^(length-1) * u(1/x); length defaults to len(coeffs)."""
        n = len(self.coeffs) if length is None else length
        padded = list(self.coeffs[:n]) + [0] * (n - len(self.coeffs))
        return UniPoly._raw(self.field, padded[::-1])

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def evaluate(self, point: int) -> Fp:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % p
        return Fp(acc, self.field)

    def series_inv(self, n: int) -> "UniPoly":
        return upoly_series_inv(self, n)

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        return upoly_divmod(self, other)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return upoly_divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return upoly_divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Quotient of an exact division; a nonzero remainder is a bug."""
        quotient, remainder = upoly_divmod(self, other)
        if not remainder.is_zero:
            raise CertificateFailure(
                f"division by polynomial of degree {other.degree} left remainder of degree {remainder.degree}"
            )
        return quotient

    # -------------------------------------------------------------- comparisons

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly.constant(self.field, other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({format_poly(self.coeffs, self.field)}, {self.field})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.field)


def format_poly(coeffs: Sequence[int], fld: PrimeField, var: str = "x", offset: int = 0) -> str:
    """Render with symmetric residues, lowest degree first."""
    terms = []
    for i, c in enumerate(coeffs):
        c = fld.signed(c)
        if c == 0:
            continue
        e = i + offset
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms) if terms else "0"


# =============================================================================
# Named operations
# =============================================================================


def upoly_mul(u: UniPoly, v: UniPoly) -> UniPoly:
    """Exact product in F_p[x]."""
    return u * v


def upoly_series_inv(u: UniPoly, n: int) -> UniPoly:
    """
    Inverse of u modulo x^n by Newton doubling.

    Args:
        u: Series with nonzero constant term
        n: Target precision (positive)

    Returns:
        g with deg g < n and u*g = 1 mod x^n

    Raises:
        NotAUnit: if u(0) = 0
    """
    if n <= 0:
        raise InvalidInput(f"precision must be positive, got {n}")
    if u[0] == 0:
        raise NotAUnit("series has no constant term")
    fld = u.field
    g = UniPoly.constant(fld, fld.inv(u[0]))
    prec = 1
    two = UniPoly.constant(fld, 2)
    while prec < n:
        prec = min(2 * prec, n)
        # g <- g * (2 - u*g) mod x^prec
        g = g.mul_trunc(two - u.mul_trunc(g, prec), prec)
    return g.truncate(n)


_NEWTON_DIVISION_CUTOFF = 64


def upoly_divmod(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """
    Euclidean division a = q*b + r with deg r < deg b.

    Large quotients use reversed-series inversion instead of the quadratic
    long division.
    """
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    fld = a.field
    if a.degree < b.degree:
        return UniPoly.zero(fld), a
    qlen = len(a.coeffs) - len(b.coeffs) + 1
    if len(b.coeffs) == 1:
        inv = fld.inv(b.leading)
        return a.scale(inv), UniPoly.zero(fld)
    if qlen > _NEWTON_DIVISION_CUTOFF and len(b.coeffs) > _NEWTON_DIVISION_CUTOFF:
        rev_q = a.reverse().mul_trunc(upoly_series_inv(b.reverse(), qlen), qlen)
        q = rev_q.reverse(qlen)
        return q, a - q * b

    p = fld.p
    rem = list(a.coeffs)
    bc = b.coeffs
    m = len(bc) - 1
    inv = fld.inv(b.leading)
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + m] % p
        if c:
            c = c * inv % p
            quot[k] = c
            for j in range(m):
                rem[k + j] -= c * bc[j]
        rem[k + m] = 0
    return UniPoly._raw(fld, quot), UniPoly._raw(fld, [c % p for c in rem[:m]])


def upoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero when both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()
