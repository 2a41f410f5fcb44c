"""Exact coefficient fields: the rationals and prime fields GF(p).

Polynomials store raw coefficient values (``Fraction`` for Q, ``int``
residues for GF(p)) and delegate arithmetic to the owning :class:`Field`.
:class:`Scalar` is the checked, self-describing wrapper used at API
boundaries where operands from different fields must be rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Value = Union[Fraction, int]

_WORD_LIMIT = 2**63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    """A coefficient field. ``modulus is None`` means the rationals."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            if not isinstance(self.modulus, int) or self.modulus >= _WORD_LIMIT:
                raise FieldError(f"modulus {self.modulus!r} does not fit a machine word")
            if not is_prime(self.modulus):
                raise FieldError(f"modulus {self.modulus} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    # -- element construction ------------------------------------------
    def __call__(self, value, den: int = 1) -> Value:
        """Coerce an int, Fraction or (num, den) into canonical form."""
        if self.modulus is None:
            return Fraction(value) / den if den != 1 else Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator * den
        else:
            num = int(value)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in GF({p})")
        return num * pow(den, -1, p) % p

    @property
    def zero(self) -> Value:
        return self(0)

    @property
    def one(self) -> Value:
        return self(1)

    # -- arithmetic on raw values --------------------------------------
    def add(self, a: Value, b: Value) -> Value:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: Value, b: Value) -> Value:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a: Value, b: Value) -> Value:
        return a * b if self.modulus is None else a * b % self.modulus

    def neg(self, a: Value) -> Value:
        return -a if self.modulus is None else -a % self.modulus

    def inv(self, a: Value) -> Value:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.modulus is None else pow(a, -1, self.modulus)

    def div(self, a: Value, b: Value) -> Value:
        return self.mul(a, self.inv(b))

    # -- text ----------------------------------------------------------
    def format(self, a: Value) -> str:
        if self.modulus is None and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def __str__(self):
        return "Q" if self.modulus is None else f"GF({self.modulus})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


_OPS = {
    "add": Field.add,
    "sub": Field.sub,
    "mul": Field.mul,
    "div": Field.div,
}


@dataclass(frozen=True)
class Scalar:
    """A field element that remembers its field."""

    field: Field
    value: Value

    @classmethod
    def of(cls, field: Field, value, den: int = 1) -> Scalar:
        return cls(field, field(value, den))

    def _check(self, other: Scalar) -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other):
        return arith(self, other, "add")

    def __sub__(self, other):
        return arith(self, other, "sub")

    def __mul__(self, other):
        return arith(self, other, "mul")

    def __truediv__(self, other):
        return arith(self, other, "div")

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    a._check(b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return Scalar(a.field, fn(a.field, a.value, b.value))


def inverse(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.inv(a.value))
