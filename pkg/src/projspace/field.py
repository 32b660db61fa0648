"""Finite fields GF(p^m), q <= 27, with elements stored as dense integer indices.

An element index is read as the base-p digit vector of polynomial
coefficients, lowest degree first: in GF(4) index 2 is ``x`` and index 3 is
``x + 1``.  Moduli are coefficient tuples in the same low-to-high order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence, Tuple

MAX_ORDER = 27

# Low-to-high coefficients of the monic modulus used when none is supplied.
BUILTIN_MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 0, 1),  # x^2 + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
}


class FieldError(ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class UnsupportedOrder(FieldError):
    pass


class MixedFields(FieldError):
    pass


class ZeroInverse(FieldError, ZeroDivisionError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(a: list, b: Sequence[int], p: int) -> list:
    """Remainder of a modulo monic b, coefficients low-to-high over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]] + [0] * max(0, db - len(a))


def _has_proper_factor(modulus: Sequence[int], p: int) -> bool:
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(modulus, divisor, p)):
                return True
    return False


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with precomputed addition, multiplication and inverse tables."""

    p: int
    m: int = 1
    modulus: Tuple[int, ...] = ()
    add_table: tuple = field(default=(), init=False, repr=False, compare=False)
    mul_table: tuple = field(default=(), init=False, repr=False, compare=False)
    neg_table: tuple = field(default=(), init=False, repr=False, compare=False)
    inv_table: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        q = self.order
        digits = [self._digits(i) for i in range(q)]
        add = tuple(
            tuple(self._index([(x + y) % self.p for x, y in zip(digits[a], digits[b])]) for b in range(q))
            for a in range(q)
        )
        mul = tuple(tuple(self._mul_poly(digits[a], digits[b]) for b in range(q)) for a in range(q))
        neg = tuple(add[a].index(0) for a in range(q))
        inv = tuple([0] + [mul[a].index(1) for a in range(1, q)])
        object.__setattr__(self, "add_table", add)
        object.__setattr__(self, "mul_table", mul)
        object.__setattr__(self, "neg_table", neg)
        object.__setattr__(self, "inv_table", inv)

    @property
    def order(self) -> int:
        return self.p**self.m

    q = order

    def _digits(self, index: int) -> list:
        out = []
        for _ in range(self.m):
            out.append(index % self.p)
            index //= self.p
        return out

    def _index(self, digits) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d
        return value

    def _mul_poly(self, a: list, b: list) -> int:
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        if self.m > 1:
            prod = _poly_mod(prod, self.modulus, self.p)
        return self._index(prod[: self.m])

    # Raw index arithmetic, used by the linear algebra inner loops.
    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.inv_table[a]

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, index)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.order)]

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, doc: dict) -> "FieldSpec":
        modulus = doc.get("modulus") or None
        return field_make(int(doc["p"]), int(doc.get("m", 1)), modulus)

    def __str__(self):
        return f"GF({self.order})"


def field_make(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build and validate GF(p^m).

    ``modulus`` lists the m+1 coefficients of a monic polynomial, lowest
    degree first. For m > 1 it defaults to the built-in table entry.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise UnsupportedOrder(f"degree must be >= 1, got {m}")
    q = p**m
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"GF({q}) exceeds the supported order {MAX_ORDER}")
    if m == 1:
        if modulus:
            raise FieldError("prime fields take no modulus")
        return FieldSpec(p, 1, ())
    if modulus is None:
        if q not in BUILTIN_MODULI:
            raise UnsupportedOrder(f"no built-in modulus for GF({q})")
        modulus = BUILTIN_MODULI[q]
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != m + 1 or any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus must have {m + 1} coefficients in [0, {p})")
    if modulus[-1] != 1:
        raise FieldError("modulus must be monic")
    if _has_proper_factor(modulus, p):
        raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p, m, modulus)


def field_from_order(q: int) -> FieldSpec:
    """GF(q) with the built-in modulus when q is a proper prime power."""
    if q < 2:
        raise UnsupportedOrder(f"no field of order {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise UnsupportedOrder(f"{q} is not a prime power")
    return field_make(p, m)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.order:
            raise FieldError(f"index {self.index} out of range for {self.field}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise MixedFields("operands belong to different fields")

    def __add__(self, other):
        return field_add(self, other)

    def __sub__(self, other):
        return field_sub(self, other)

    def __mul__(self, other):
        return field_mul(self, other)

    def __truediv__(self, other):
        return field_mul(self, field_inv(other))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"{self.field}[{self.index}]"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.field, a.field.add(a.index, b.index))


def field_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.field, a.field.sub(a.index, b.index))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.field, a.field.mul(a.index, b.index))


def field_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.index))
