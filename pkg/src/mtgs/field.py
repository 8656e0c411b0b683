"""Prime-field arithmetic with deterministic operation counting.

The counters are the cost currency for every benchmark in this package:
one modular multiplication ticks ``mul_count`` once, no matter how cheap
it is on real hardware.  Inversions tick ``inv_count`` and are reported
as-is, never converted into multiplications.  Additions, subtractions
and negations tick ``add_count``.

Counting scopes are context managers (:func:`count_ops`).  Scopes nest:
operations inside an inner scope are also charged to every enclosing
scope.  The active-scope stack is context-local, so decodes running in
parallel threads or processes cannot corrupt each other's counts;
cross-trial totals are obtained by merging counters after the fact.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass


@dataclass
class OpCounter:
    """Tally of field operations performed inside a counting scope."""

    mul_count: int = 0
    add_count: int = 0
    inv_count: int = 0

    def merge(self, other: OpCounter) -> OpCounter:
        return OpCounter(
            self.mul_count + other.mul_count,
            self.add_count + other.add_count,
            self.inv_count + other.inv_count,
        )

    def snapshot(self) -> OpCounter:
        return OpCounter(self.mul_count, self.add_count, self.inv_count)


_ACTIVE: ContextVar[tuple[OpCounter, ...]] = ContextVar("mtgs_counters", default=())


def tick(mul: int = 0, add: int = 0, inv: int = 0) -> None:
    """Charge operations to every active counting scope."""
    for counter in _ACTIVE.get():
        counter.mul_count += mul
        counter.add_count += add
        counter.inv_count += inv


@contextmanager
def count_ops():
    """Open a counting scope; yields the scope's :class:`OpCounter`."""
    counter = OpCounter()
    token = _ACTIVE.set(_ACTIVE.get() + (counter,))
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field of integers modulo a prime p, 2 <= p < 2**31.

    Elements are canonical ints in [0, p).  The arithmetic helpers work
    on raw ints and tick the active counters; :class:`FieldElement`
    wraps them with operator syntax.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not 2 <= p < 2**31:
            raise ValueError(f"modulus {p} out of range [2, 2^31)")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    # raw int arithmetic, counted

    def add(self, a: int, b: int) -> int:
        tick(add=1)
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        tick(add=1)
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        tick(add=1)
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        tick(mul=1)
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        tick(inv=1)
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


class FieldElement:
    """An element of a :class:`PrimeField` with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.sub(other.value, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.div(other.value, self.value))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, exponent: int) -> FieldElement:
        # square-and-multiply; every modular multiplication is counted
        if exponent < 0:
            base = self.field.inv(self.value)
            exponent = -exponent
        else:
            base = self.value
        if exponent == 0:
            return FieldElement(self.field, 1)
        acc = base
        for bit in bin(exponent)[3:]:
            acc = self.field.mul(acc, acc)
            if bit == "1":
                acc = self.field.mul(acc, base)
        return FieldElement(self.field, acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}"
