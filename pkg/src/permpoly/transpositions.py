"""Polynomials of low degree that swap two field elements and fix the rest.

The workhorse is the degree-(q-2) construction: l(x) = x^(q-2) + ... + x + 1
vanishes on everything except 0 and 1 (where it takes 1 and -1), so
f = l + x swaps 0 and 1, and conjugating by the affine maps through a and b
swaps any two distinct elements. The classical nested construction of
degree (q-2)^3 is provided for comparison, as are the prime-field forms it
generalizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EqualPoints, FieldTooSmall, NotAField, NotPrimeField, RingTooLarge, ZeroPoint
from .polys import FunctionTable, Polynomial, function_table
from .rings import Element, FiniteField

_EXPAND_LIMIT = 16  # nested construction reaches degree (q-2)^3


def _require_field(ring) -> FiniteField:
    if not ring.is_field:
        raise NotAField(f"construction is over a finite field, got {ring.spec()}")
    return ring


def ones_poly(field: FiniteField) -> Polynomial:
    """l(x) = x^(q-2) + ... + x + 1; maps 0 to 1, 1 to -1, all else to 0."""
    _require_field(field)
    return Polynomial(field, [1] * (field.q - 1))


def base_transposition(field: FiniteField) -> Polynomial:
    """The degree-(q-2) polynomial inducing the transposition (0 1)."""
    _require_field(field)
    if field.q <= 2:
        raise FieldTooSmall("a transposition polynomial needs q > 2")
    return ones_poly(field) + Polynomial.x(field)


def transposition_poly(field: FiniteField, a, b) -> Polynomial:
    """The degree-(q-2) polynomial inducing the transposition (a b).

    Built as m2(f(m1(x))) with m1(x) = (x-a)/(b-a), m2(x) = (b-a)x + a
    around the (0 1) polynomial f, then fully expanded.
    """
    _require_field(field)
    a = field.element(a)
    b = field.element(b)
    if a == b:
        raise EqualPoints(f"transposition needs two distinct points, got {a!r} twice")
    f = base_transposition(field)
    s = (b - a).inverse()
    m1 = Polynomial(field, [-a * s, s])
    return f.compose(m1) * (b - a) + a


def carlitz_poly(field: FiniteField, a) -> Polynomial:
    """The nested degree-(q-2)^3 polynomial inducing (0 a), fully expanded.

    -a^2 * (((x-a)^(q-2) + 1/a)^(q-2) - a)^(q-2); expansion is refused for
    q > 16, where the degree exceeds 2744 (use carlitz_table instead).
    """
    _require_field(field)
    a = field.element(a)
    if field.q <= 2:
        raise FieldTooSmall("the nested construction needs q > 2")
    if not a:
        raise ZeroPoint("the nested construction swaps 0 with a nonzero point")
    if field.q > _EXPAND_LIMIT:
        raise RingTooLarge(
            f"expansion reaches degree {(field.q - 2) ** 3}; capped at q <= {_EXPAND_LIMIT}"
        )
    m = field.q - 2
    inner = (Polynomial.x(field) - a) ** m + a.inverse()
    inner = inner**m - a
    return inner**m * (-(a * a))


def carlitz_table(field: FiniteField, a) -> FunctionTable:
    """Function table of the nested construction, evaluated without expansion."""
    _require_field(field)
    a = field.element(a)
    if field.q <= 2:
        raise FieldTooSmall("the nested construction needs q > 2")
    if not a:
        raise ZeroPoint("the nested construction swaps 0 with a nonzero point")
    m = field.q - 2
    inv_a = a.inverse()
    neg_a2 = -(a * a)

    def nested(x: Element) -> Element:
        t = (x - a) ** m + inv_a
        t = t**m - a
        return neg_a2 * t**m

    return FunctionTable(field, tuple(field.index(nested(x)) for x in field.elements()))


def martin_poly(field: FiniteField) -> Polynomial:
    """x^(p-2) + x^(p-3) + ... + x^2 + 2x + 1, inducing (0 1) over F_p.

    Stated for odd prime fields only; extension fields must use
    base_transposition / transposition_poly.
    """
    _require_field(field)
    if field.n != 1:
        raise NotPrimeField(f"the prime-field form does not apply to {field.spec()}")
    if field.p == 2:
        raise FieldTooSmall("the prime-field form needs an odd prime")
    return Polynomial(field, [1, 2] + [1] * (field.p - 3))


def martin_poly_ab(field: FiniteField, a, b) -> Polynomial:
    """(b-a)*(t^(p-2) + ... + t^2 + 2t + 1) + a with t = (x-a)/(b-a), expanded.

    Induces (a b) over F_p; agrees with transposition_poly on prime fields.
    """
    _require_field(field)
    if field.n != 1:
        raise NotPrimeField(f"the prime-field form does not apply to {field.spec()}")
    if field.p == 2:
        raise FieldTooSmall("the prime-field form needs an odd prime")
    a = field.element(a)
    b = field.element(b)
    if a == b:
        raise EqualPoints(f"transposition needs two distinct points, got {a!r} twice")
    s = (b - a).inverse()
    t = Polynomial(field, [-a * s, s])
    total = t * 2 + 1
    power = t
    for _ in range(2, field.p - 1):
        power = power * t
        total = total + power
    return total * (b - a) + a


@dataclass
class VerificationReport:
    """Outcome of checking a polynomial against an intended transposition."""

    is_permutation: bool
    is_exact_transposition: bool
    table: FunctionTable
    degree: int | float
    counterexample: Element | None

    def to_json(self) -> dict:
        ring = self.table.ring
        return {
            "is_permutation": self.is_permutation,
            "is_exact_transposition": self.is_exact_transposition,
            "table": [ring.format_element(x) for x in self.table.outputs()],
            "degree": None if self.degree == float("-inf") else self.degree,
            "counterexample": (
                None
                if self.counterexample is None
                else ring.format_element(self.counterexample)
            ),
        }


def verify_transposition(f: Polynomial, a, b) -> VerificationReport:
    """Check by direct substitution that f swaps a and b and fixes the rest.

    Failure is reported, never raised; the counterexample is the first
    point (in enumeration order) where the table deviates.
    """
    ring = f.ring
    a = ring.element(a)
    b = ring.element(b)
    table = function_table(f)
    ia, ib = ring.index(a), ring.index(b)
    expected = list(range(ring.size))
    expected[ia], expected[ib] = ib, ia
    counterexample = None
    for i, (got, want) in enumerate(zip(table.image, expected)):
        if got != want:
            counterexample = ring.elements()[i]
            break
    return VerificationReport(
        is_permutation=table.is_bijective(),
        is_exact_transposition=counterexample is None,
        table=table,
        degree=f.degree,
        counterexample=counterexample,
    )
