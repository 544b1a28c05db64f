"""Exact arithmetic in GF(p^m) for small prime powers.

Field elements travel as plain integers in [0, q): the base-p digits of
the encoding (little-endian) are the coefficients of the representative
polynomial.  All interpretation is done by a FieldSpec, which fixes p, m
and the monic irreducible modulus polynomial; a thin FieldElement wrapper
provides operator syntax on top of the integer encodings.

The encoding convention makes orderings and file formats trivial: the
ascending integer order of encodings is the canonical element order used
by every enumeration and every deterministic tie-break in the library.

Everything is exact; nothing here is floating point.  Fields are small by
design (constructors reject q > 2^16, and extension degrees above 8 are
out of scope), so square roots and squareness are settled by exhaustive
scans rather than by anything clever.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .errors import DivisionByZero, NotASquare, SpecMismatch

MAX_FIELD_ORDER = 1 << 16
MAX_EXT_DEGREE = 8

# Largest q for which the q*q lookup tables feeding the enumeration
# kernels are built; larger fields fall back to scalar arithmetic.
KERNEL_TABLE_MAX_Q = 2048


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(value % p)
        value //= p
    return tuple(out)


def _undigits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_mod(a, b, p):
    """Remainder of a divided by monic b, coefficients little-endian mod p."""
    r = list(a)
    db = len(b) - 1
    while len(r) > db:
        lead = r[-1] % p
        if lead:
            off = len(r) - 1 - db
            for i in range(db):
                r[off + i] = (r[off + i] - lead * b[i]) % p
        r.pop()
    return r


def _poly_is_irreducible(coeffs, p):
    """Exhaustive trial division by every monic polynomial of degree <= m/2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[m] % p != 1:
        return False
    if coeffs[0] % p == 0:  # divisible by x
        return m == 1
    for d in range(1, m // 2 + 1):
        for enc in range(p ** d):
            div = _digits(enc, p, d) + (1,)
            if not any(c % p for c in _poly_mod(coeffs, div, p)):
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """A concrete GF(p^m): order, characteristic and modulus polynomial.

    Immutable after construction (internal caches are filled lazily but
    idempotently); instances compare equal iff (p, m, modulus) agree, and
    elements are only operable across equal specs.

    All arithmetic methods work on integer encodings.  The ``element``
    method wraps an encoding into a FieldElement for operator syntax.
    """

    __slots__ = ("p", "m", "q", "modulus", "_red", "_exp", "_log",
                 "_sqrt_map", "_tables", "_square_values")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        if m > 1 and m > MAX_EXT_DEGREE:
            raise ValueError(
                f"extension degree m={m} unsupported (irreducibility "
                f"testing is limited to degree {MAX_EXT_DEGREE})")
        q = p ** m
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order q={q} exceeds the 2^16 scope guard")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", q)

        if m == 1:
            if modulus is not None:
                raise ValueError("modulus is only meaningful for m > 1")
            mod = (0, 1)  # the formal polynomial x; unused for m = 1
        elif modulus is None:
            mod = self._default_modulus(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1:
                raise ValueError(
                    f"modulus must list m+1={m + 1} coefficients, got {len(mod)}")
            if mod[m] != 1:
                raise ValueError("modulus must be monic")
            if not _poly_is_irreducible(mod, p):
                raise ValueError(
                    f"modulus {list(mod)} is reducible over GF({p})")
        object.__setattr__(self, "modulus", mod)
        # x^m reduced: x^m = red[0] + red[1]x + ... + red[m-1]x^(m-1)
        object.__setattr__(self, "_red",
                           tuple((-mod[i]) % p for i in range(m)) if m > 1 else ())
        object.__setattr__(self, "_sqrt_map", None)
        object.__setattr__(self, "_tables", None)
        object.__setattr__(self, "_square_values", None)
        if m > 1:
            exp, log = self._build_exp_log()
            object.__setattr__(self, "_exp", exp)
            object.__setattr__(self, "_log", log)
        else:
            object.__setattr__(self, "_exp", None)
            object.__setattr__(self, "_log", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    @staticmethod
    def _default_modulus(p, m):
        # Lexicographically smallest monic irreducible, scanning the
        # non-leading coefficients in ascending encoding order.
        for enc in range(p ** m):
            cand = _digits(enc, p, m) + (1,)
            if _poly_is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- core scalar arithmetic on encodings --------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        """Schoolbook product reduced by the modulus (used to bootstrap
        the exp/log tables; normal multiplication goes through them)."""
        p, m, red = self.p, self.m, self._red
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i in range(m):
                    if red[i]:
                        prod[d - m + i] = (prod[d - m + i] + c * red[i]) % p
        return _undigits(prod[:m], p)

    def _build_exp_log(self):
        q = self.q
        radicals = _prime_factors(q - 1)

        def pow_poly(base, e):
            result = 1
            cur = base
            while e:
                if e & 1:
                    result = self._mul_poly(result, cur)
                cur = self._mul_poly(cur, cur)
                e >>= 1
            return result

        gen = None
        for g in range(2, q):
            if all(pow_poly(g, (q - 1) // r) != 1 for r in radicals):
                gen = g
                break
        if gen is None:
            raise AssertionError("no generator found")  # unreachable
        exp = [0] * (q - 1)
        log = [-1] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_poly(v, gen)
        return tuple(exp), tuple(log)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"encoding {a} outside [0, {self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        value = 0
        mult = 1
        while a or b:
            value += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return value

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        value = 0
        mult = 1
        while a:
            d = a % p
            if d:
                value += (p - d) * mult
            a //= p
            mult *= p
        return value

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- squares -------------------------------------------------------------

    def is_square(self, a: int) -> bool:
        """True iff a = y^2 for some y.  Zero counts; in characteristic 2
        everything is a square (Frobenius is a bijection)."""
        self._check(a)
        if a == 0 or self.p == 2:
            return True
        if self.m == 1:
            return pow(a, (self.q - 1) // 2, self.p) == 1
        return self._log[a] % 2 == 0

    def _sqrt_table(self):
        if self._sqrt_map is None:
            table = {}
            for y in range(self.q):
                s = self.mul(y, y)
                if s not in table:
                    table[s] = y
            object.__setattr__(self, "_sqrt_map", table)
        return self._sqrt_map

    def sqrt(self, a: int) -> int:
        """The root with the smaller integer encoding (unique in char 2).

        Found by one ascending exhaustive squaring pass over the field,
        memoized per spec; fields in scope are small enough that nothing
        smarter pays off.
        """
        try:
            return self._sqrt_table()[self._check(a)]
        except KeyError:
            raise NotASquare(f"{a} is not a square in GF({self.q})") from None

    # -- enumeration ---------------------------------------------------------

    def values(self) -> range:
        """All q encodings in ascending order."""
        return range(self.q)

    def nonzero_values(self) -> range:
        return range(1, self.q)

    def nonzero_square_values(self) -> tuple[int, ...]:
        """Ascending nonzero squares: (q-1)/2 of them for odd q, all q-1
        in characteristic 2."""
        if self._square_values is None:
            vals = tuple(sorted({self.mul(y, y) for y in range(1, self.q)}))
            object.__setattr__(self, "_square_values", vals)
        return self._square_values

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self._check(value))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # -- lookup tables for the enumeration kernels ---------------------------

    @property
    def supports_kernels(self) -> bool:
        return self.q <= KERNEL_TABLE_MAX_Q

    def kernel_tables(self):
        """(mul, add, neg, inv) flat uint16 tables for the hot kernels.

        mul/add are q*q row-major (entry a*q+b), neg/inv are q-long with
        inv[0] = 0 as a never-read placeholder.  Built once per spec;
        construction is O(q^2).
        """
        if not self.supports_kernels:
            raise RuntimeError(
                f"kernel tables unavailable for q={self.q} > {KERNEL_TABLE_MAX_Q}")
        if self._tables is None:
            q, p, m = self.q, self.p, self.m
            if p == 2:
                add = array("H", (a ^ b for a in range(q) for b in range(q)))
            elif m == 1:
                add = array("H", ((a + b) % p for a in range(q) for b in range(q)))
            else:
                add = array("H", (self.add(a, b)
                                  for a in range(q) for b in range(q)))
            if m == 1:
                mul = array("H", ((a * b) % p for a in range(q) for b in range(q)))
            else:
                exp, log, o = self._exp, self._log, q - 1
                mul = array("H", (0 if a == 0 or b == 0
                                  else exp[(log[a] + log[b]) % o]
                                  for a in range(q) for b in range(q)))
            neg = array("H", (self.neg(a) for a in range(q)))
            inv = array("H", [0] + [self.inv(a) for a in range(1, q)])
            object.__setattr__(self, "_tables", (mul, add, neg, inv))
        return self._tables

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FieldSpec(q={self.q})"
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __str__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec, wrapping its integer encoding."""

    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(
                f"encoding {self.value} outside [0, {self.spec.q})")

    def _operand(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(
                    f"cannot combine {self.spec} and {other.spec} elements")
            return other.value
        if isinstance(other, int):
            return self.spec._check(other)
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(self.spec, value)

    def __add__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.sub(self.value, v))

    def __mul__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._operand(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.spec.div(self.value, v))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow_(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))

    def is_square(self) -> bool:
        return self.spec.is_square(self.value)

    def sqrt(self) -> "FieldElement":
        return self._wrap(self.spec.sqrt(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


# -- module-level operation aliases ------------------------------------------

def _pair(x: FieldElement, y: FieldElement):
    if x.spec != y.spec:
        raise SpecMismatch(f"cannot combine {x.spec} and {y.spec} elements")
    return x.spec


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    spec = _pair(x, y)
    return FieldElement(spec, spec.add(x.value, y.value))


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    spec = _pair(x, y)
    return FieldElement(spec, spec.mul(x.value, y.value))


def inv(x: FieldElement) -> FieldElement:
    return FieldElement(x.spec, x.spec.inv(x.value))


def is_square(x: FieldElement) -> bool:
    return x.spec.is_square(x.value)


def sqrt(x: FieldElement) -> FieldElement:
    return FieldElement(x.spec, x.spec.sqrt(x.value))


def enumerate_elements(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, v) for v in spec.values()]


def enumerate_nonzero(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, v) for v in spec.nonzero_values()]


def enumerate_nonzero_squares(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, v) for v in spec.nonzero_square_values()]
