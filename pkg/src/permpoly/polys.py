"""Dense univariate polynomials over any supported ring.

Coefficients are stored low degree first with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree -inf. All
operations return new polynomials; nothing here mutates.
"""

from __future__ import annotations

import numpy as np

from .errors import MixedRings, NotAField
from .rings import Element, Ring, parse_ring

NEG_INF = float("-inf")


class Polynomial:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, Element):
                if c.ring != ring:
                    raise MixedRings(f"{c.ring} coefficient in {ring} polynomial")
                vals.append(c.val)
            elif isinstance(c, int) and not isinstance(c, bool):
                vals.append(ring.from_int(c).val)
            else:
                raise TypeError(f"bad coefficient {c!r}")
        zero = ring._zero_val()
        while vals and vals[-1] == zero:
            vals.pop()
        self.ring = ring
        self.coeffs = tuple(Element(ring, v) for v in vals)

    @classmethod
    def _from_vals(cls, ring: Ring, vals) -> Polynomial:
        poly = object.__new__(cls)
        zero = ring._zero_val()
        vals = list(vals)
        while vals and vals[-1] == zero:
            vals.pop()
        poly.ring = ring
        poly.coeffs = tuple(Element(ring, v) for v in vals)
        return poly

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, [c])

    @classmethod
    def x(cls, ring: Ring) -> Polynomial:
        return cls(ring, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Element:
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def _vals(self):
        return [c.val for c in self.coeffs]

    def _coerce_operand(self, other):
        """Other as a coefficient-value list, or None if unsupported."""
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise MixedRings(f"{other.ring} polynomial mixed with {self.ring}")
            return other._vals()
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise MixedRings(f"{other.ring} element mixed with {self.ring} polynomial")
            return [other.val]
        if isinstance(other, int) and not isinstance(other, bool):
            return [self.ring.from_int(other).val]
        return None

    def __call__(self, x: Element) -> Element:
        if not isinstance(x, Element) or x.ring != self.ring:
            x = self.ring.element(x)
        if not self.coeffs:
            return self.ring.zero
        ring = self.ring
        acc = self.coeffs[-1].val
        xv = x.val
        for c in reversed(self.coeffs[:-1]):
            acc = ring._add(ring._mul(acc, xv), c.val)
        return Element(ring, acc)

    def __add__(self, other):
        ov = self._coerce_operand(other)
        if ov is None:
            return NotImplemented
        ring = self.ring
        sv = self._vals()
        if len(sv) < len(ov):
            sv, ov = ov, sv
        out = list(sv)
        for i, v in enumerate(ov):
            out[i] = ring._add(out[i], v)
        return Polynomial._from_vals(ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        ov = self._coerce_operand(other)
        if ov is None:
            return NotImplemented
        ring = self.ring
        out = self._vals()
        out += [ring._zero_val()] * (len(ov) - len(out))
        for i, v in enumerate(ov):
            out[i] = ring._sub(out[i], v)
        return Polynomial._from_vals(ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        ring = self.ring
        return Polynomial._from_vals(ring, [ring._neg(v) for v in self._vals()])

    def __mul__(self, other):
        ov = self._coerce_operand(other)
        if ov is None:
            return NotImplemented
        ring = self.ring
        sv = self._vals()
        if not sv or not ov:
            return Polynomial._from_vals(ring, [])
        zero = ring._zero_val()
        out = [zero] * (len(sv) + len(ov) - 1)
        for i, a in enumerate(sv):
            if a != zero:
                for j, b in enumerate(ov):
                    if b != zero:
                        out[i + j] = ring._add(out[i + j], ring._mul(a, b))
        return Polynomial._from_vals(ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial(self.ring, [1])
        for _ in range(exponent):
            result = result * self
        return result

    def compose(self, inner: Polynomial) -> Polynomial:
        """self(inner(x)), expanded (Horner on polynomials)."""
        if inner.ring != self.ring:
            raise MixedRings(f"{inner.ring} polynomial mixed with {self.ring}")
        if not self.coeffs:
            return Polynomial._from_vals(self.ring, [])
        acc = Polynomial.constant(self.ring, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + c
        return acc

    def derivative(self) -> Polynomial:
        ring = self.ring
        out = [
            ring._mul(ring.from_int(i).val, c.val)
            for i, c in enumerate(self.coeffs)
            if i >= 1
        ]
        return Polynomial._from_vals(ring, out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Polynomial({poly_str(self)!r}, {self.ring.spec()!r})"


def poly_str(f: Polynomial) -> str:
    """Human-readable form, highest degree first."""
    if not f.coeffs:
        return "0"
    ring = f.ring
    one = ring.one
    parts = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        cs = str(ring.format_element(c))
        xs = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if xs and c == one:
            parts.append(xs)
        elif xs:
            parts.append(f"{cs}*{xs}")
        else:
            parts.append(cs)
    return " + ".join(parts)


class FunctionTable:
    """The map a polynomial induces on the whole ring.

    image[i] is the enumeration index of the output at the i-th ring
    element; two polynomials represent the same function iff their
    tables are equal.
    """

    __slots__ = ("ring", "image")

    def __init__(self, ring: Ring, image):
        image = tuple(int(i) for i in image)
        if len(image) != ring.size:
            raise ValueError(f"table has {len(image)} entries, ring has {ring.size}")
        self.ring = ring
        self.image = image

    def outputs(self) -> tuple[Element, ...]:
        elems = self.ring.elements()
        return tuple(elems[i] for i in self.image)

    def __getitem__(self, x: Element) -> Element:
        return self.ring.elements()[self.image[self.ring.index(x)]]

    def is_bijective(self) -> bool:
        return len(set(self.image)) == self.ring.size

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return self.ring == other.ring and self.image == other.image

    def __hash__(self):
        return hash((self.ring, self.image))

    def __repr__(self):
        return f"FunctionTable({list(self.image)}, {self.ring.spec()!r})"

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec(),
            "outputs": [self.ring.format_element(x) for x in self.outputs()],
        }


def function_table(f: Polynomial) -> FunctionTable:
    """Evaluate f at every ring element, in canonical enumeration order."""
    ring = f.ring
    elems = ring.elements()
    if not f.coeffs:
        zero_idx = ring.index(ring.zero)
        return FunctionTable(ring, (zero_idx,) * ring.size)
    tabs = ring.op_tables()
    if tabs is not None:
        add_t, mul_t = tabs
        ci = [ring.index(c) for c in f.coeffs]
        xs = np.arange(ring.size)
        acc = np.full(ring.size, ci[-1], dtype=np.int64)
        for c in reversed(ci[:-1]):
            acc = add_t[mul_t[acc, xs], c]
        return FunctionTable(ring, acc)
    return FunctionTable(ring, tuple(ring.index(f(x)) for x in elems))


def reduce_canonical(f: Polynomial) -> Polynomial:
    """The unique polynomial of degree < q inducing the same function on F_q.

    Uses the identity x^q = x: every exponent e >= 1 folds to
    ((e - 1) mod (q - 1)) + 1.
    """
    ring = f.ring
    if not ring.is_field:
        raise NotAField(f"canonical reduction needs a field, got {ring.spec()}")
    q = ring.q
    out = [ring._zero_val()] * q
    for e, c in enumerate(f.coeffs):
        target = 0 if e == 0 else ((e - 1) % (q - 1)) + 1
        out[target] = ring._add(out[target], c.val)
    return Polynomial._from_vals(ring, out)


def poly_to_json(f: Polynomial) -> dict:
    return {
        "ring": f.ring.spec(),
        "coeffs": [f.ring.format_element(c) for c in f.coeffs],
    }


def poly_from_json(obj, ring: Ring | None = None) -> Polynomial:
    """Parse {"ring": spec, "coeffs": [...]}; ring may be supplied instead."""
    if isinstance(obj, str):
        import json

        obj = json.loads(obj)
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("polynomial JSON needs a 'coeffs' field")
    if "ring" in obj:
        declared = parse_ring(obj["ring"])
        if ring is None:
            ring = declared
        elif ring != declared:
            raise MixedRings(f"polynomial declares {obj['ring']}, expected {ring.spec()}")
    if ring is None:
        raise ValueError("polynomial JSON needs a 'ring' field or an explicit ring")
    return Polynomial(ring, [ring.parse_element(c) for c in obj["coeffs"]])
