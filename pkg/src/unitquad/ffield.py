"""Arithmetic in GF(p^n) for odd primes p.

Elements are coefficient vectors ``(c0, c1, ..., c_{n-1})`` of polynomials
modulo a fixed monic irreducible polynomial.  Each element also has an
integer index, the coefficient vector read as a base-p number, which is the
canonical ordering used for vertex numbering everywhere else.

Two arithmetic paths are provided.  ``FieldElement`` operators work directly
on coefficient polynomials.  ``Field.tables`` builds dense numpy lookup
tables (via discrete exp/log tables of a primitive element) for the
graph-building hot loops.  Tests check the two against each other.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

MAX_DEGREE = 4
MAX_ORDER = 2500


class FieldError(ValueError):
    """Raised for unsupported field parameters or undefined operations."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` and p prime, else None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    return (p, n) if rest == 1 else None


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    """All odd prime powers in ``[lo, hi]``."""
    out = []
    for q in range(max(lo, 3), hi + 1):
        pn = prime_power_decomposition(q)
        if pn is not None and pn[0] != 2:
            out.append(q)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.p == 2:
            raise FieldError("characteristic 2 is not supported (q must be odd)")
        if not 1 <= self.n <= MAX_DEGREE:
            raise FieldError(f"extension degree {self.n} outside [1, {MAX_DEGREE}]")
        if self.q > MAX_ORDER:
            raise FieldError(f"q = {self.q} exceeds the desk-scale cap {MAX_ORDER}")

    @property
    def q(self) -> int:
        return self.p**self.n

    @classmethod
    def from_q(cls, q: int) -> PrimePower:
        pn = prime_power_decomposition(q)
        if pn is None:
            raise FieldError(f"{q} is not a prime power")
        return cls(*pn)


class SquareClass(enum.Enum):
    ZERO = "ZERO"
    SQUARE = "SQUARE"
    NONSQUARE = "NONSQUARE"


class Op(enum.Enum):
    ADD = "ADD"
    SUB = "SUB"
    MUL = "MUL"
    NEG = "NEG"
    INV = "INV"


# -- polynomials over Z_p, low-order coefficient first -------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic polynomial ``m`` (both low-first)."""
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_mod(m, divisor, p):
                return False
    return True


def _canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n, low-order coefficient first.

    Candidates are ordered by (c_{n-1}, ..., c_0) compared as integers.
    """
    if n == 1:
        return (0, 1)
    for high_first in itertools.product(range(p), repeat=n):
        low_first = list(reversed(high_first)) + [1]
        if _is_irreducible(low_first, p):
            return tuple(low_first)
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")


@dataclass(frozen=True)
class FieldTables:
    """Dense lookup tables indexed by canonical element index."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is -1
    square: np.ndarray
    trace: np.ndarray
    square_class: np.ndarray  # 0 ZERO, 1 SQUARE, -1 NONSQUARE


class Field:
    """The field GF(p^n) with its canonical modulus.

    Build instances with :func:`make_field`, which caches them per (p, n).
    """

    def __init__(self, params: PrimePower):
        self.params = params
        self.p = params.p
        self.n = params.n
        self.q = params.q
        self._modulus_low = _canonical_modulus(self.p, self.n)

    def __repr__(self) -> str:
        return f"Field(GF({self.p}^{self.n}), modulus={self.modulus_string()})"

    @property
    def modulus(self) -> tuple[int, ...]:
        """Monic modulus coefficients, leading term first, constant term last."""
        return tuple(reversed(self._modulus_low))

    def modulus_string(self) -> str:
        terms = []
        for power, c in zip(range(self.n, -1, -1), self.modulus):
            if c == 0:
                continue
            mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            coef = "" if (c == 1 and power) else str(c)
            terms.append(coef + mono)
        return " + ".join(terms)

    # -- element construction ---------------------------------------------------

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Element from an index (int) or a low-first coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise FieldError(f"index {value} outside GF({self.q})")
            return FieldElement(self, self._coeffs_of(value))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.n:
            raise FieldError(f"too many coefficients for degree {self.n}")
        return FieldElement(self, coeffs + (0,) * (self.n - len(coeffs)))

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def _coeffs_of(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            index, c = divmod(index, self.p)
            out.append(c)
        return tuple(out)

    def index_of(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    # -- polynomial-path arithmetic on coefficient tuples -----------------------

    def _padded(self, poly: list[int]) -> tuple[int, ...]:
        return tuple(poly) + (0,) * (self.n - len(poly))

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        if self.n == 1:
            return (prod[0] % self.p,)
        return self._padded(_poly_mod(prod, self._modulus_low, self.p))

    def _pow(self, a, e: int):
        result = self._padded([1])
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _inv(self, a):
        if not any(a):
            raise FieldError("inverse of zero is undefined")
        return self._pow(a, self.q - 2)

    # -- lookup tables ----------------------------------------------------------

    @functools.cached_property
    def tables(self) -> FieldTables:
        q, p = self.q, self.p
        idx = np.arange(q)
        digits = np.stack([(idx // p**k) % p for k in range(self.n)])
        weights = np.array([p**k for k in range(self.n)])
        add = np.einsum(
            "k,kij->ij", weights, (digits[:, :, None] + digits[:, None, :]) % p
        )
        neg = weights @ ((-digits) % p)

        gen = self._primitive_index()
        exp = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = self._padded([1])
        g = self._coeffs_of(gen)
        for k in range(q - 1):
            i = self.index_of(cur)
            exp[k] = i
            log[i] = k
            cur = self._mul(cur, g)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = idx[1:]
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        inv = np.full(q, -1, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        square = mul[idx, idx]
        sq_class = np.zeros(q, dtype=np.int64)
        sq_class[1:] = np.where(log[1:] % 2 == 0, 1, -1)

        trace = np.zeros(q, dtype=np.int64)
        for i in range(q):
            trace[i] = self._trace(self._coeffs_of(i))
        return FieldTables(
            add=add.astype(np.int64),
            mul=mul,
            neg=neg.astype(np.int64),
            inv=inv,
            square=square,
            trace=trace,
            square_class=sq_class,
        )

    def _primitive_index(self) -> int:
        order = self.q - 1
        prime_factors = [d for d in range(2, order + 1) if order % d == 0 and is_prime(d)]
        one = self._padded([1])
        for i in range(1, self.q):
            a = self._coeffs_of(i)
            if all(self._pow(a, order // r) != one for r in prime_factors):
                return i
        raise AssertionError("multiplicative group has no generator")

    def _trace(self, a) -> int:
        total = self._padded([0])
        cur = a
        for _ in range(self.n):
            total = self._add(total, cur)
            cur = self._pow(cur, self.p)
        if any(total[1:]):
            raise AssertionError("trace left the prime subfield")
        return total[0]


@dataclass(frozen=True)
class FieldElement:
    field: Field
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        if self.field.n == 1:
            return str(self.coeffs[0])
        return f"{self.field.q}:{list(self.coeffs)}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.field.element(other % self.field.p).coeffs
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.q, self.coeffs))

    @property
    def index(self) -> int:
        return self.field.index_of(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _coerce(self, other) -> tuple[int, ...]:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError("operands belong to different fields")
            return other.coeffs
        if isinstance(other, int):
            return self.field.element([other]).coeffs
        return NotImplemented

    def _wrap(self, coeffs) -> FieldElement:
        return FieldElement(self.field, coeffs)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field._add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field._sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field._sub(b, self.coeffs))

    def __neg__(self):
        return self._wrap(self.field._neg(self.coeffs))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field._mul(self.coeffs, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field._mul(self.coeffs, self.field._inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field._mul(b, self.field._inv(self.coeffs)))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field._pow(self.coeffs, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field._inv(self.coeffs))


@functools.lru_cache(maxsize=None)
def _field_cache(p: int, n: int) -> Field:
    return Field(PrimePower(p, n))


def make_field(params: PrimePower | int) -> Field:
    """Return the (cached) field for ``params`` or for an integer order q."""
    if isinstance(params, int):
        params = PrimePower.from_q(params)
    return _field_cache(params.p, params.n)


def arith(f: Field, op: Op | str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    op = Op(op)
    if op is Op.NEG:
        return -a
    if op is Op.INV:
        return a.inverse()
    if b is None:
        raise FieldError(f"{op.value} needs two operands")
    if op is Op.ADD:
        return a + b
    if op is Op.SUB:
        return a - b
    return a * b


def square_class(f: Field, a: FieldElement) -> SquareClass:
    if not a:
        return SquareClass.ZERO
    if a ** ((f.q - 1) // 2) == f.one:
        return SquareClass.SQUARE
    return SquareClass.NONSQUARE


def sqrt(f: Field, a: FieldElement) -> set[FieldElement]:
    """All square roots of ``a``, by exhaustive search."""
    return {b for b in enumerate_elements(f) if b * b == a}


def absolute_trace(f: Field, a: FieldElement) -> int:
    return f._trace(a.coeffs)


def enumerate_elements(f: Field) -> list[FieldElement]:
    return [f.element(i) for i in range(f.q)]


def iter_elements(f: Field) -> Iterator[FieldElement]:
    return (f.element(i) for i in range(f.q))
