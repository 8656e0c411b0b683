"""Dense univariate polynomials over a prime field.

Coefficients are canonical ints in [0, p), index i holding the X^i
coefficient, with trailing zeros stripped.  The zero polynomial stores
an empty list and has degree :data:`BOTTOM`, a sentinel that compares
strictly below every integer and renders as "⊥".

Counting conventions (see :mod:`mtgs.field` for the counters):

* multiplication is schoolbook and charges one mul per coefficient
  pair, i.e. len(a)*len(b) muls plus the accumulation adds;
* elementwise add/sub charge one add per position of the longer
  operand; operations with the zero polynomial are free;
* scalar multiplication charges len(a) muls;
* division charges one inversion for the divisor's leading coefficient
  plus (lb+1) muls and lb adds per quotient coefficient;
* evaluation is Horner: deg muls and deg adds;
* multiplying or dividing by a power of X moves coefficients and is
  free of field operations.
"""

from __future__ import annotations

from .field import FieldElement, PrimeField, tick

BOTTOM = float("-inf")


def render_degree(d) -> str:
    return "⊥" if d == BOTTOM else str(d)


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs, normalize: bool = True):
        if normalize:
            p = field.p
            coeffs = [int(c) % p for c in coeffs]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        self.field = field
        self.coeffs = coeffs  # treated as immutable

    @classmethod
    def zero(cls, field: PrimeField) -> Polynomial:
        return cls(field, [], normalize=False)

    @classmethod
    def one(cls, field: PrimeField) -> Polynomial:
        return cls(field, [1], normalize=False)

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> Polynomial:
        return cls(field, [c])

    @classmethod
    def x_power(cls, field: PrimeField, e: int) -> Polynomial:
        return cls(field, [0] * e + [1], normalize=False)

    # structure

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else BOTTOM

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coeff(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise ValueError("mixed fields")

    # ring operations

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        tick(add=max(len(a), len(b)))
        p = self.field.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = (out[i] + bi) % p
        while out and out[-1] == 0:
            out.pop()
        return Polynomial(self.field, out, normalize=False)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not b:
            return self
        if not a:
            return -other
        tick(add=max(len(a), len(b)))
        p = self.field.p
        n = max(len(a), len(b))
        out = [0] * n
        for i in range(n):
            av = a[i] if i < len(a) else 0
            bv = b[i] if i < len(b) else 0
            out[i] = (av - bv) % p
        while out and out[-1] == 0:
            out.pop()
        return Polynomial(self.field, out, normalize=False)

    def __neg__(self) -> Polynomial:
        if not self.coeffs:
            return self
        tick(add=len(self.coeffs))
        p = self.field.p
        return Polynomial(self.field, [-c % p for c in self.coeffs], normalize=False)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        la, lb = len(a), len(b)
        if la == 0 or lb == 0:
            return Polynomial.zero(self.field)
        p = self.field.p
        out = [0] * (la + lb - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        tick(mul=la * lb, add=la * lb - (la + lb - 1))
        out = [v % p for v in out]
        return Polynomial(self.field, out, normalize=False)

    def scalar_mul(self, c: int) -> Polynomial:
        la = len(self.coeffs)
        if la == 0:
            return self
        p = self.field.p
        c %= p
        tick(mul=la)
        if c == 0:
            return Polynomial.zero(self.field)
        return Polynomial(self.field, [ai * c % p for ai in self.coeffs], normalize=False)

    def shifted(self, e: int) -> Polynomial:
        """Multiply by X^e (coefficient move, no field operations)."""
        if not self.coeffs or e == 0:
            return self
        return Polynomial(self.field, [0] * e + self.coeffs, normalize=False)

    def unshifted(self, e: int) -> Polynomial:
        """Exactly divide by X^e; raises if X^e does not divide."""
        if not self.coeffs or e == 0:
            return self
        if len(self.coeffs) <= e or any(c != 0 for c in self.coeffs[:e]):
            raise ValueError("non-exact division by X power")
        return Polynomial(self.field, self.coeffs[e:], normalize=False)

    def divrem(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        a, b = self.coeffs, other.coeffs
        la, lb = len(a), len(b)
        if la < lb:
            return Polynomial.zero(self.field), self
        p = self.field.p
        inv_lc = pow(b[-1], p - 2, p)
        tick(inv=1)
        r = list(a)
        q = [0] * (la - lb + 1)
        for shift in range(la - lb, -1, -1):
            c = r[shift + lb - 1] * inv_lc % p
            q[shift] = c
            for i in range(lb):
                r[shift + i] = (r[shift + i] - c * b[i]) % p
        tick(mul=(la - lb + 1) * (lb + 1), add=(la - lb + 1) * lb)
        rem = r[: lb - 1]
        while rem and rem[-1] == 0:
            rem.pop()
        return (
            Polynomial(self.field, q, normalize=False),
            Polynomial(self.field, rem, normalize=False),
        )

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = self.divrem(other)
        if not r.is_zero:
            raise ValueError("non-exact division")
        return q

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative polynomial power")
        if e == 0:
            return Polynomial.one(self.field)
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def eval(self, x: int) -> int:
        """Horner evaluation at x (an int, reduced mod p)."""
        c = self.coeffs
        if not c:
            return 0
        p = self.field.p
        x %= p
        acc = c[-1]
        for i in range(len(c) - 2, -1, -1):
            acc = (acc * x + c[i]) % p
        tick(mul=len(c) - 1, add=len(c) - 1)
        return acc

    # comparisons and rendering

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, tuple(self.coeffs)))

    def coeff_list(self) -> str:
        """Compact ascending form "[c_0,...,c_d]"."""
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("X" if c == 1 else f"{c}*X")
            else:
                terms.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial(F_{self.field.p}, {self.coeffs})"


def roots_product(field: PrimeField, points) -> Polynomial:
    """Monic polynomial vanishing exactly on the given distinct points."""
    points = [int(a) % field.p for a in points]
    if len(set(points)) != len(points):
        raise ValueError("duplicate points")
    result = Polynomial.one(field)
    for a in points:
        result = result * Polynomial(field, [-a, 1])
    return result


def lagrange_interpolate(field: PrimeField, xs, ys) -> Polynomial:
    """The unique polynomial of degree < len(xs) through (xs[i], ys[i])."""
    xs = [int(x) % field.p for x in xs]
    ys = [int(y) % field.p for y in ys]
    if len(xs) != len(ys):
        raise ValueError("point count mismatch")
    if not xs:
        raise ValueError("need at least one point")
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate points")
    master = roots_product(field, xs)
    acc = Polynomial.zero(field)
    for x, y in zip(xs, ys):
        num = master.exact_div(Polynomial(field, [-x, 1]))
        denom = num.eval(x)
        scale = field.div(y, denom)
        acc = acc + num.scalar_mul(scale)
    return acc


def univariate_roots(poly: Polynomial) -> list[int]:
    """All roots in F_q, found by exhaustive evaluation, ascending."""
    if poly.is_zero:
        raise ValueError("zero polynomial: every element is a root")
    return [x for x in range(poly.field.p) if poly.eval(x) == 0]
