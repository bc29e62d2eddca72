"""Finite fields GF(p^n) and finite local rings Z/p^k and F_q[u]/(u^k).

A Ring owns a canonical enumeration of its elements, exact arithmetic on
canonical values, and (for local rings) the residue map onto the residue
field together with a fixed complete residue system lifting it back.

Canonical value forms:
  Z/p^k          int in range(p^k)
  GF(p^n)        tuple of n ints in range(p), constant coefficient first
  F_q[u]/(u^k)   tuple of k GF(p^n) values, coefficient of u^0 first

Enumeration order is fixed: Z/p^k ascending integers, fields and
F_q[u]/(u^k) lexicographic on the (constant-first) coefficient vectors.
Permutation tables index elements by this order.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import (
    MixedRings,
    NonPrimeCharacteristic,
    NonUnitInverse,
    ReducibleModulus,
    RingSpecError,
    RingTooLarge,
    TrivialIdeal,
)

ENUM_LIMIT = 10_000  # rings must stay fully enumerable
_TABLE_LIMIT = 512  # largest ring for which numpy op tables are built


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


def _poly_rem(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num modulo the monic polynomial den, over F_p.

    Coefficient lists are constant-term first.
    """
    rem = [c % p for c in num]
    d = len(den) - 1
    while len(rem) > d:
        lead = rem[-1]
        if lead:
            for i in range(d):
                rem[len(rem) - 1 - d + i] = (rem[len(rem) - 1 - d + i] - lead * den[i]) % p
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= n/2."""
    n = len(coeffs) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = (*tail, 1)
            if not _poly_rem(list(coeffs), den, p):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Candidates are compared constant term first, so the search order of
    itertools.product (first position slowest) is already the right one.
    """
    for head in itertools.product(range(p), repeat=n):
        cand = (*head, 1)
        if _is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no monic irreducible of degree {n} over F_{p}")  # unreachable


class Element:
    """A value of a specific ring, kept in canonical reduced form."""

    __slots__ = ("ring", "val")

    def __init__(self, ring: Ring, val):
        self.ring = ring
        self.val = val

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise MixedRings(f"{other.ring} element used in {self.ring}")
            return other.val
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other).val
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ring, self.ring._sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ring, self.ring._sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ring, self.ring._mul(self.val, v))

    __rmul__ = __mul__

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.val))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return Element(self.ring, self.ring._pow(self.val, exponent))

    def inverse(self) -> Element:
        return Element(self.ring, self.ring._inv(self.val))

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.val)

    def in_maximal_ideal(self) -> bool:
        return not self.ring._is_unit(self.val)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.val == other.val
        if isinstance(other, int) and not isinstance(other, bool):
            return self.val == self.ring.from_int(other).val
        return NotImplemented

    def __hash__(self):
        return hash((self.ring._key, self.val))

    def __bool__(self):
        return self.val != self.ring.zero.val

    def __repr__(self):
        return f"Element({self.ring.format_element(self)!r}, {self.ring.spec()!r})"


class Ring:
    """Base class: a fully enumerable commutative ring with identity."""

    is_field = False
    is_local = False

    size: int
    char: int
    _key: tuple

    def __init__(self):
        self._vals = None
        self._elem_cache = None
        self._idx = None
        self._tables = None

    # -- raw arithmetic on canonical values; subclasses implement -----------

    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_unit(self, a) -> bool:
        raise NotImplementedError

    def _iter_vals(self):
        raise NotImplementedError

    def _zero_val(self):
        raise NotImplementedError

    def _one_val(self):
        raise NotImplementedError

    def _pow(self, a, e: int):
        result = self._one_val()
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- public surface ------------------------------------------------------

    @property
    def zero(self) -> Element:
        return Element(self, self._zero_val())

    @property
    def one(self) -> Element:
        return Element(self, self._one_val())

    def from_int(self, i: int) -> Element:
        """The element i * 1, i.e. the image of the integer i in the ring."""
        raise NotImplementedError

    def element(self, value) -> Element:
        """Coerce a user-facing value (Element, int, or serialized form)."""
        if isinstance(value, Element):
            if value.ring != self:
                raise MixedRings(f"{value.ring} element used in {self}")
            return value
        return self.parse_element(value)

    def _ensure_enum(self):
        if self._vals is None:
            if self.size > ENUM_LIMIT:
                raise RingTooLarge(f"{self.spec()} has {self.size} elements (limit {ENUM_LIMIT})")
            vals = tuple(self._iter_vals())
            self._vals = vals
            self._idx = {v: i for i, v in enumerate(vals)}
            self._elem_cache = tuple(Element(self, v) for v in vals)

    def elements(self) -> tuple[Element, ...]:
        """All elements, in the fixed canonical enumeration order."""
        self._ensure_enum()
        return self._elem_cache

    def index(self, x: Element) -> int:
        """Position of x in the canonical enumeration."""
        if x.ring != self:
            raise MixedRings(f"{x.ring} element used in {self}")
        self._ensure_enum()
        return self._idx[x.val]

    def units(self) -> tuple[Element, ...]:
        return tuple(x for x in self.elements() if self._is_unit(x.val))

    def maximal_ideal(self) -> tuple[Element, ...]:
        """Elements of the maximal ideal (for a field: just zero)."""
        return tuple(x for x in self.elements() if not self._is_unit(x.val))

    def op_tables(self):
        """(ADD, MUL) index tables as numpy arrays, or None if the ring is too big.

        ADD[i, j] is the enumeration index of elements[i] + elements[j];
        used to vectorize bulk evaluation over the whole ring.
        """
        if self.size > _TABLE_LIMIT:
            return None
        if self._tables is None:
            self._ensure_enum()
            n = self.size
            vals = self._vals
            idx = self._idx
            add = np.empty((n, n), dtype=np.int32)
            mul = np.empty((n, n), dtype=np.int32)
            for i, a in enumerate(vals):
                for j, b in enumerate(vals):
                    add[i, j] = idx[self._add(a, b)]
                    mul[i, j] = idx[self._mul(a, b)]
            self._tables = (add, mul)
        return self._tables

    def spec(self) -> str:
        raise NotImplementedError

    def format_element(self, x: Element):
        """Serialized (JSON-ready) form of x."""
        raise NotImplementedError

    def parse_element(self, obj) -> Element:
        """Inverse of format_element; also accepts plain ints as i * 1."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return self.spec()


class FiniteField(Ring):
    """GF(p^n) as F_p[u] modulo a monic irreducible of degree n."""

    is_field = True

    def __init__(self, p: int, n: int, irr: tuple[int, ...], irr_is_auto: bool):
        super().__init__()
        self.p = p
        self.n = n
        self.irr = irr
        self.irr_is_auto = irr_is_auto
        self.q = p**n
        self.size = self.q
        self.char = p
        # x^n == -(low part of irr); used to fold products back below degree n
        self._red = tuple((-c) % p for c in irr[:n])
        self._key = ("gf", p, n, irr)

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, n = self.p, self.n
        if n == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        red = self._red
        for e in range(2 * n - 2, n - 1, -1):
            lead = prod[e] % p
            if lead:
                base = e - n
                for i, r in enumerate(red):
                    prod[base + i] += lead * r
        return tuple(c % p for c in prod[:n])

    def _is_unit(self, a) -> bool:
        return any(a)

    def _inv(self, a):
        if not any(a):
            raise NonUnitInverse("zero has no inverse")
        return self._pow(a, self.q - 2)

    def _zero_val(self):
        return (0,) * self.n

    def _one_val(self):
        return (1,) + (0,) * (self.n - 1)

    def _iter_vals(self):
        return itertools.product(range(self.p), repeat=self.n)

    def from_int(self, i: int) -> Element:
        return Element(self, ((i % self.p),) + (0,) * (self.n - 1))

    def spec(self) -> str:
        if self.n == 1:
            return f"gf:{self.p}"
        if self.irr_is_auto:
            return f"gf:{self.p}^{self.n}"
        return f"gf:{self.p}^{self.n}/" + ",".join(str(c) for c in self.irr)

    def format_element(self, x: Element):
        if self.n == 1:
            return x.val[0]
        return list(x.val)

    def parse_element(self, obj) -> Element:
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.from_int(obj)
        if isinstance(obj, (list, tuple)):
            if len(obj) > self.n or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in obj
            ):
                raise ValueError(f"element of {self.spec()} needs at most {self.n} integers")
            vec = [c % self.p for c in obj] + [0] * (self.n - len(obj))
            return Element(self, tuple(vec))
        raise ValueError(f"cannot interpret {obj!r} as an element of {self.spec()}")


class LocalRing(Ring):
    """A finite local ring with nonzero maximal ideal M and residue field R/M."""

    is_local = True
    residue_field: FiniteField

    def _residue_val(self, a):
        raise NotImplementedError

    def _lift_val(self, a):
        raise NotImplementedError

    def residue(self, x: Element) -> Element:
        """The image of x in the residue field R/M."""
        if x.ring != self:
            raise MixedRings(f"{x.ring} element used in {self}")
        return Element(self.residue_field, self._residue_val(x.val))

    def lift(self, a: Element) -> Element:
        """The fixed complete-residue-system representative of a in R."""
        if a.ring != self.residue_field:
            raise MixedRings(f"{a.ring} element used as residue of {self}")
        return Element(self, self._lift_val(a.val))

    def residue_system(self) -> tuple[Element, ...]:
        """Lifts of all residue-field elements, in residue-field order."""
        return tuple(self.lift(a) for a in self.residue_field.elements())


class ZModRing(LocalRing):
    """Z/p^k with k >= 2; maximal ideal (p), residue field F_p."""

    def __init__(self, p: int, k: int):
        super().__init__()
        self.p = p
        self.k = k
        self.m = p**k
        self.size = self.m
        self.char = self.m
        self.residue_field = make_field(p, 1)
        self._key = ("zmod", p, k)

    def _add(self, a, b):
        return (a + b) % self.m

    def _sub(self, a, b):
        return (a - b) % self.m

    def _mul(self, a, b):
        return (a * b) % self.m

    def _neg(self, a):
        return (-a) % self.m

    def _pow(self, a, e: int):
        return pow(a, e, self.m)

    def _inv(self, a):
        try:
            return pow(a, -1, self.m)
        except ValueError:
            raise NonUnitInverse(f"{a} is not a unit of {self.spec()}") from None

    def _is_unit(self, a) -> bool:
        return a % self.p != 0

    def _zero_val(self):
        return 0

    def _one_val(self):
        return 1

    def _iter_vals(self):
        return iter(range(self.m))

    def from_int(self, i: int) -> Element:
        return Element(self, i % self.m)

    def _residue_val(self, a):
        return (a % self.p,)

    def _lift_val(self, a):
        return a[0]

    def spec(self) -> str:
        return f"zmod:{self.p}^{self.k}"

    def format_element(self, x: Element):
        return x.val

    def parse_element(self, obj) -> Element:
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.from_int(obj)
        raise ValueError(f"cannot interpret {obj!r} as an element of {self.spec()}")


class TruncatedPolynomialRing(LocalRing):
    """F_q[u]/(u^k) with k >= 2; maximal ideal (u), residue field F_q."""

    def __init__(self, field: FiniteField, k: int):
        super().__init__()
        self.field = field
        self.k = k
        self.size = field.q**k
        self.char = field.p
        self.residue_field = field
        self._key = ("fqu", field._key, k)

    def _add(self, a, b):
        f = self.field
        return tuple(f._add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        f = self.field
        return tuple(f._sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        f = self.field
        return tuple(f._neg(x) for x in a)

    def _mul(self, a, b):
        f = self.field
        k = self.k
        prod = [f._zero_val()] * k
        for i, ai in enumerate(a):
            if any(ai):
                for j in range(k - i):
                    bj = b[j]
                    if any(bj):
                        prod[i + j] = f._add(prod[i + j], f._mul(ai, bj))
        return tuple(prod)

    def _is_unit(self, a) -> bool:
        return any(a[0])

    def _inv(self, a):
        # a = a0 (1 + w) with w nilpotent, so 1/a = (1/a0) sum (-w)^j
        if not any(a[0]):
            raise NonUnitInverse(f"element with residue 0 is not a unit of {self.spec()}")
        f = self.field
        i0 = f._inv(a[0])
        w = tuple(f._zero_val() if i == 0 else f._mul(i0, c) for i, c in enumerate(a))
        acc = self._one_val()
        term = self._one_val()
        for _ in range(1, self.k):
            term = self._neg(self._mul(term, w))
            acc = self._add(acc, term)
        return tuple(f._mul(i0, c) for c in acc)

    def _zero_val(self):
        return (self.field._zero_val(),) * self.k

    def _one_val(self):
        return (self.field._one_val(),) + (self.field._zero_val(),) * (self.k - 1)

    def _iter_vals(self):
        fvals = tuple(self.field._iter_vals())
        return itertools.product(fvals, repeat=self.k)

    def from_int(self, i: int) -> Element:
        c0 = self.field.from_int(i).val
        return Element(self, (c0,) + (self.field._zero_val(),) * (self.k - 1))

    def _residue_val(self, a):
        return a[0]

    def _lift_val(self, a):
        return (a,) + (self.field._zero_val(),) * (self.k - 1)

    def spec(self) -> str:
        if not self.field.irr_is_auto:
            raise RingSpecError("fqu over a custom field modulus is not expressible in the ring-spec grammar")
        return f"fqu:{self.field.p}^{self.field.n},{self.k}"

    def format_element(self, x: Element):
        f = self.field
        return [f.format_element(Element(f, c)) for c in x.val]

    def parse_element(self, obj) -> Element:
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.from_int(obj)
        if isinstance(obj, (list, tuple)):
            if len(obj) > self.k:
                raise ValueError(f"element of {self.spec()} needs at most {self.k} coefficients")
            coeffs = [self.field.parse_element(c).val for c in obj]
            coeffs += [self.field._zero_val()] * (self.k - len(coeffs))
            return Element(self, tuple(coeffs))
        raise ValueError(f"cannot interpret {obj!r} as an element of {self.spec()}")


def make_field(p: int, n: int = 1, irr=None) -> FiniteField:
    """GF(p^n); if irr is omitted, the lexicographically smallest monic
    irreducible of degree n over F_p is chosen (constant term compared first)."""
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > ENUM_LIMIT:
        raise RingTooLarge(f"GF({p}^{n}) has {p**n} elements (limit {ENUM_LIMIT})")
    auto = _smallest_irreducible(p, n)
    if irr is None:
        chosen, is_auto = auto, True
    else:
        chosen = tuple(c % p for c in irr)
        if len(chosen) != n + 1 or chosen[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {n} over F_{p}")
        if n > 1 and not _is_irreducible(chosen, p):
            raise ReducibleModulus(f"{list(chosen)} factors over F_{p}")
        is_auto = chosen == auto
    return FiniteField(p, n, chosen, is_auto)


def make_zmod(p: int, k: int) -> ZModRing:
    """Z/p^k as a local ring; k >= 2 so the maximal ideal is nonzero."""
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 2:
        raise TrivialIdeal(f"Z/{p}^{k} has zero maximal ideal; use make_field({p}) instead")
    if p**k > ENUM_LIMIT:
        raise RingTooLarge(f"Z/{p}^{k} has {p**k} elements (limit {ENUM_LIMIT})")
    return ZModRing(p, k)


def make_fqu(field: FiniteField, k: int) -> TruncatedPolynomialRing:
    """F_q[u]/(u^k) over the given field; k >= 2 so (u) is nonzero."""
    if not isinstance(field, FiniteField):
        raise TypeError("base of F_q[u]/(u^k) must be a FiniteField")
    if k < 2:
        raise TrivialIdeal(f"{field.spec()}[u]/(u^{k}) has zero maximal ideal; use the field itself")
    if field.q**k > ENUM_LIMIT:
        raise RingTooLarge(f"{field.spec()}[u]/(u^{k}) has {field.q**k} elements (limit {ENUM_LIMIT})")
    return TruncatedPolynomialRing(field, k)


def _parse_power(text: str, what: str) -> tuple[int, int]:
    base, caret, exp = text.partition("^")
    try:
        b = int(base)
        e = int(exp) if caret else 1
    except ValueError:
        raise RingSpecError(f"malformed {what} {text!r}") from None
    return b, e


def parse_ring(spec: str) -> Ring:
    """Parse a ring-spec string.

    Grammar: gf:p^n | gf:p^n/c0,c1,...,1 | zmod:p^k | fqu:p^n,k
    (gf:p is shorthand for gf:p^1).
    """
    kind, sep, rest = spec.strip().partition(":")
    if not sep or not rest:
        raise RingSpecError(f"malformed ring spec {spec!r}")
    kind = kind.lower()
    if kind == "gf":
        main, slash, irrpart = rest.partition("/")
        p, n = _parse_power(main, "field spec")
        irr = None
        if slash:
            try:
                irr = [int(t) for t in irrpart.split(",")]
            except ValueError:
                raise RingSpecError(f"malformed modulus in {spec!r}") from None
        return make_field(p, n, irr)
    if kind == "zmod":
        if "^" not in rest:
            raise RingSpecError(f"zmod spec must be zmod:p^k, got {spec!r}")
        p, k = _parse_power(rest, "zmod spec")
        return make_zmod(p, k)
    if kind == "fqu":
        main, comma, kpart = rest.rpartition(",")
        if not comma:
            raise RingSpecError(f"fqu spec must be fqu:p^n,k, got {spec!r}")
        p, n = _parse_power(main, "fqu base field")
        try:
            k = int(kpart)
        except ValueError:
            raise RingSpecError(f"malformed fqu spec {spec!r}") from None
        return make_fqu(make_field(p, n), k)
    raise RingSpecError(f"unknown ring family {kind!r}")
