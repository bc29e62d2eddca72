"""Permutation criterion and permutation-polynomial lifting over local rings.

A polynomial permutes a finite local ring R exactly when it permutes the
residue field R/M and its formal derivative is unit-valued; both sides
only depend on inputs modulo M, so the derivative condition is checked on
a complete residue system. On top of the criterion sits the lifting
construction h = f + (f' + g)(x^q - x) + p*l, which turns any polynomial
permuting R/M into a permutation polynomial of R, for any g that is
unit-valued and any l at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CongruentPoints,
    FieldTooSmall,
    GNotUnitValued,
    MixedRings,
    NotLocalRing,
    ResidueNotPermutation,
)
from .polys import Polynomial, function_table
from .rings import Element, LocalRing


def residue_poly(f: Polynomial) -> Polynomial:
    """Coefficient-wise image of f in (R/M)[x]."""
    ring = f.ring
    if not ring.is_local:
        raise NotLocalRing(f"{ring.spec()} has no residue field")
    return Polynomial(ring.residue_field, [ring.residue(c) for c in f.coeffs])


def lift_poly(f: Polynomial, ring: LocalRing) -> Polynomial:
    """Coefficient-wise lift of f from (R/M)[x] to R[x] through the residue system."""
    if not ring.is_local:
        raise NotLocalRing(f"{ring.spec()} has no residue field")
    if f.ring != ring.residue_field:
        raise MixedRings(f"{f.ring.spec()} polynomial is not over the residue field of {ring.spec()}")
    return Polynomial(ring, [ring.lift(c) for c in f.coeffs])


def brute_force_is_permutation(f: Polynomial) -> bool:
    """Independent oracle: evaluate everywhere and check bijectivity."""
    return function_table(f).is_bijective()


@dataclass
class CriterionReport:
    """Outcome of the two-condition permutation criterion.

    condition1: the residue image permutes R/M (witness_residue is the
    first residue point whose image collides with an earlier one).
    condition2: f' is a unit at every residue-system point (witness_point
    is the first lift r with f'(r) in M).
    """

    condition1: bool
    condition2: bool
    verdict: bool
    witness_residue: Element | None = None
    witness_point: Element | None = None

    def to_json(self) -> dict:
        doc = {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "verdict": self.verdict,
        }
        if self.witness_residue is not None:
            doc["witness_residue"] = self.witness_residue.ring.format_element(self.witness_residue)
        if self.witness_point is not None:
            doc["witness_point"] = self.witness_point.ring.format_element(self.witness_point)
        return doc


def noebauer_is_permutation(f: Polynomial) -> CriterionReport:
    """Decide whether f permutes its local ring without enumerating images."""
    ring = f.ring
    if not ring.is_local:
        raise NotLocalRing(f"criterion applies to local rings, not {ring.spec()}")
    table = function_table(residue_poly(f))
    condition1 = True
    witness_residue = None
    seen = set()
    for i, out in enumerate(table.image):
        if out in seen:
            condition1 = False
            witness_residue = ring.residue_field.elements()[i]
            break
        seen.add(out)
    deriv = f.derivative()
    condition2 = True
    witness_point = None
    for r in ring.residue_system():
        if deriv(r).in_maximal_ideal():
            condition2 = False
            witness_point = r
            break
    return CriterionReport(
        condition1=condition1,
        condition2=condition2,
        verdict=condition1 and condition2,
        witness_residue=witness_residue,
        witness_point=witness_point,
    )


def unit_valued_witness(g: Polynomial) -> Element | None:
    """First residue-system point where g is not a unit, or None.

    g(r) mod M depends only on r mod M, so the residue system suffices.
    """
    ring = g.ring
    for r in ring.residue_system():
        if g(r).in_maximal_ideal():
            return r
    return None


def _pow_diff_poly(ring: LocalRing) -> Polynomial:
    """x^q - x over R, where q is the residue field size."""
    q = ring.residue_field.q
    coeffs = [0] * (q + 1)
    coeffs[1] = -1
    coeffs[q] = 1
    return Polynomial(ring, coeffs)


def proposition_h(f: Polynomial, g: Polynomial, l: Polynomial) -> Polynomial:
    """h = f + (f' + g)(x^q - x) + p*l, a permutation polynomial of R.

    Needs the residue image of f to permute R/M and g to be unit-valued;
    p is the residue-field characteristic mapped into R (zero in the
    equal-characteristic rings F_q[u]/(u^k), where the p*l term vanishes).
    """
    ring = f.ring
    if not ring.is_local:
        raise NotLocalRing(f"lifting applies to local rings, not {ring.spec()}")
    if g.ring != ring or l.ring != ring:
        raise MixedRings("f, g, l must share one ring")
    if not function_table(residue_poly(f)).is_bijective():
        raise ResidueNotPermutation(f"residue image of {f!r} does not permute {ring.residue_field.spec()}")
    bad = unit_valued_witness(g)
    if bad is not None:
        raise GNotUnitValued(f"g({ring.format_element(bad)}) lies in the maximal ideal")
    p = ring.residue_field.p
    h = f + (f.derivative() + g) * _pow_diff_poly(ring) + l * ring.from_int(p)
    # guaranteed by construction; a failure here would be a library bug
    if not noebauer_is_permutation(h).verdict:
        raise AssertionError(f"lifted polynomial fails the permutation criterion: {h!r}")
    return h


def transposition_poly_over_ring(ring: LocalRing, a, b) -> Polynomial:
    """The transposition polynomial built directly in R[x].

    Same arithmetic as the field construction, with the division by b - a
    done as multiplication by its unit inverse in R; the residue image is
    the transposition polynomial of (a mod M, b mod M) over R/M.
    """
    if not ring.is_local:
        raise NotLocalRing(f"expected a local ring, not {ring.spec()}")
    a = ring.element(a)
    b = ring.element(b)
    if ring.residue(a) == ring.residue(b):
        raise CongruentPoints("the two points coincide modulo the maximal ideal")
    q = ring.residue_field.q
    if q <= 2:
        raise FieldTooSmall("a transposition polynomial needs a residue field with q > 2")
    base = Polynomial(ring, [1, 2] + [1] * (q - 3))
    s = (b - a).inverse()
    m1 = Polynomial(ring, [-a * s, s])
    return base.compose(m1) * (b - a) + a


def corollary_h(a: Element, b: Element, g: Polynomial, l: Polynomial) -> Polynomial:
    """Lift of the transposition (a mod M, b mod M) to a permutation of R.

    h = f_ab + (f_ab' + g)(x^q - x) + p*l with f_ab built in R[x]; the
    residue action of h is exactly that transposition of R/M.
    """
    ring = a.ring
    if not ring.is_local:
        raise NotLocalRing(f"lifting applies to local rings, not {ring.spec()}")
    f = transposition_poly_over_ring(ring, a, b)
    return proposition_h(f, g, l)
