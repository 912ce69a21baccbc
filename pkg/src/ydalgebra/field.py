"""Exact scalar arithmetic over the rationals and prime fields.

Every coefficient in the workbench is either a ``fractions.Fraction``
(field Q) or a ``ModInt`` residue (field F_p).  Both types are immutable,
hashable, and keep a canonical reduced form, so structural equality is
field equality and no floating point can sneak in anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Malformed scalar text or an impossible field operation."""


_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")

# deterministic Miller-Rabin witnesses, exact for all n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ModInt:
    """Residue in F_p, stored reduced to 0 <= value < p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    @property
    def numerator(self) -> int:
        return self.value

    @property
    def denominator(self) -> int:
        return 1

    def _check(self, other: "ModInt") -> None:
        if self.p != other.p:
            raise FieldError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other):
        if not isinstance(other, ModInt):
            return NotImplemented
        self._check(other)
        return ModInt(self.value + other.value, self.p)

    def __sub__(self, other):
        if not isinstance(other, ModInt):
            return NotImplemented
        self._check(other)
        return ModInt(self.value - other.value, self.p)

    def __mul__(self, other):
        if not isinstance(other, ModInt):
            return NotImplemented
        self._check(other)
        return ModInt(self.value * other.value, self.p)

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __truediv__(self, other):
        if not isinstance(other, ModInt):
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModInt(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise FieldError("inversion of zero")
        return ModInt(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        return (
            isinstance(other, ModInt)
            and self.value == other.value
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModInt({self.value}, p={self.p})"


Scalar = Union[Fraction, ModInt]


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor of the scalar field: Q when ``p`` is None, F_p otherwise."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @property
    def kind(self) -> str:
        return "Rationals" if self.p is None else "PrimeField"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else ModInt(0, self.p)

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else ModInt(1, self.p)

    def scalar(self, num: int, den: int = 1) -> Scalar:
        """Canonical field element num/den."""
        if den == 0:
            raise FieldError("zero denominator")
        if self.p is None:
            return Fraction(num, den)
        if den % self.p == 0:
            raise FieldError(f"denominator {den} not invertible mod {self.p}")
        return ModInt(num, self.p) / ModInt(den, self.p)

    def contains(self, s: Scalar) -> bool:
        if self.p is None:
            return isinstance(s, Fraction)
        return isinstance(s, ModInt) and s.p == self.p


RATIONALS = FieldSpec()


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse the text form ``-a/b`` (b omitted when 1) into a canonical scalar."""
    m = _SCALAR_RE.match(text.strip())
    if not m:
        raise FieldError(f"malformed scalar {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return field.scalar(num, den)


def format_scalar(s: Scalar) -> str:
    """Canonical text form; inverse of parse_scalar on canonical scalars."""
    if isinstance(s, ModInt):
        return str(s.value)
    if s.denominator == 1:
        return str(s.numerator)
    return f"{s.numerator}/{s.denominator}"


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def inv(x: Scalar) -> Scalar:
    if isinstance(x, ModInt):
        return x.inverse()
    if x == 0:
        raise FieldError("inversion of zero")
    return Fraction(1) / x
