"""Do the lifted-transposition permutations generate the whole group?

For a local ring R the lifting construction produces, for every pair of
residue-distinct points and every admissible (g, l), a permutation of R
whose residue action is a transposition of R/M. This module sweeps a
configurable grid of those permutations, closes them under composition,
and compares the result against the full group of polynomial
permutations. The outcome is reported, not asserted: whether the two ever
differ is exactly the open question the sweep probes.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .errors import NotLocalRing, ResidueFieldTooSmall
from .lifting import _pow_diff_poly, transposition_poly_over_ring, unit_valued_witness
from .permutations import (
    PermutationTable,
    generated_subgroup,
    polynomial_permutation_group,
)
from .polys import Polynomial, function_table, poly_to_json
from .rings import LocalRing


@dataclass(frozen=True)
class SamplingConfig:
    """Grid of auxiliary polynomials swept for each residue-distinct pair.

    g runs over all unit-valued polynomials of degree <= g_max_degree;
    l over the zero polynomial and the monomials x^0 .. x^l_max_degree.
    If g_sample_limit is set, the g grid is subsampled at that size using
    the experiment seed.
    """

    g_max_degree: int = 1
    l_max_degree: int = 2
    g_sample_limit: int | None = None

    def to_json(self) -> dict:
        return {
            "g_max_degree": self.g_max_degree,
            "l_max_degree": self.l_max_degree,
            "g_sample_limit": self.g_sample_limit,
        }


@dataclass
class ExperimentReport:
    ring: str
    sampling: dict
    seed: int
    a_size: int
    generated_order: int
    group_order: int
    equals: bool
    index: int
    runtime_ms: int
    rows: list[dict] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "sampling": self.sampling,
            "a_size": self.a_size,
            "generated_order": self.generated_order,
            "group_order": self.group_order,
            "equals": self.equals,
            "index": self.index,
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        }


def _g_candidates(ring: LocalRing, config: SamplingConfig, rng: random.Random) -> list[Polynomial]:
    coeff_len = config.g_max_degree + 1
    out = []
    for vec in itertools.product(ring.elements(), repeat=coeff_len):
        g = Polynomial(ring, vec)
        if unit_valued_witness(g) is None:
            out.append(g)
    if config.g_sample_limit is not None and len(out) > config.g_sample_limit:
        out = rng.sample(out, config.g_sample_limit)
    return out


def _l_candidates(ring: LocalRing, config: SamplingConfig) -> list[Polynomial]:
    out = [Polynomial(ring, [])]
    for d in range(config.l_max_degree + 1):
        out.append(Polynomial(ring, [0] * d + [1]))
    return out


def question_experiment(
    ring: LocalRing,
    config: SamplingConfig | None = None,
    seed: int = 0,
    max_size: int = 100,
) -> ExperimentReport:
    """Sweep the lifting grid, close under composition, compare with the group.

    The report carries |A| (distinct swept permutations), the order of the
    subgroup they generate, the order of the full polynomial-permutation
    group, and the index between them. One sweep row per grid point is kept
    for CSV export.
    """
    start = time.perf_counter()
    if not ring.is_local:
        raise NotLocalRing(f"the experiment runs over local rings, not {ring.spec()}")
    if ring.residue_field.q <= 2:
        raise ResidueFieldTooSmall("the lifting construction needs a residue field with q > 2")
    config = config or SamplingConfig()
    rng = random.Random(seed)
    gs = _g_candidates(ring, config, rng)
    ls = _l_candidates(ring, config)
    xqx = _pow_diff_poly(ring)
    p_elem = ring.from_int(ring.residue_field.p)

    seen: dict[tuple, PermutationTable] = {}
    rows = []
    elems = ring.elements()
    for a in elems:
        for b in elems:
            if ring.residue(a) == ring.residue(b):
                continue
            f = transposition_poly_over_ring(ring, a, b)
            deriv = f.derivative()
            for g in gs:
                factor = (deriv + g) * xqx
                for l in ls:
                    h = f + factor + l * p_elem
                    perm = PermutationTable.from_function_table(function_table(h))
                    seen.setdefault(perm.image, perm)
                    rows.append(
                        {
                            "a": ring.format_element(a),
                            "b": ring.format_element(b),
                            "g": poly_to_json(g)["coeffs"],
                            "l": poly_to_json(l)["coeffs"],
                            "image": [ring.format_element(elems[i]) for i in perm.image],
                            "sign": perm.sign(),
                        }
                    )
    gens = [seen[img] for img in sorted(seen)]
    closure = generated_subgroup(gens)
    group = polynomial_permutation_group(ring, max_size)
    runtime_ms = int((time.perf_counter() - start) * 1000)
    return ExperimentReport(
        ring=ring.spec(),
        sampling=config.to_json(),
        seed=seed,
        a_size=len(gens),
        generated_order=closure.order,
        group_order=group.order,
        equals=closure.order == group.order,
        index=group.order // closure.order,
        runtime_ms=runtime_ms,
        rows=rows,
    )
