"""Permutation tables, parity, and groups of polynomial permutations.

Permutations are stored as index tables over a ring's canonical element
enumeration. The group of all polynomial permutations is obtained by
materializing every polynomial function first: those are exactly the
sums of constant multiples of the (finitely many distinct) power maps
x -> x^i, so a fixed-point closure under pointwise addition of those
scaled power tables enumerates them without picking any degree bound.
"""

from __future__ import annotations

import numpy as np

from .errors import MixedRings, NotBijective, RingTooLarge
from .polys import FunctionTable, Polynomial, function_table
from .rings import Ring

_CLOSURE_LIMIT = 100  # default bound on |R| for whole-group enumeration


class PermutationTable:
    """A bijection of the ring, as a tuple of output indices."""

    __slots__ = ("ring", "image")

    def __init__(self, ring: Ring, image):
        image = tuple(int(i) for i in image)
        if len(image) != ring.size or set(image) != set(range(ring.size)):
            raise NotBijective(f"{image} is not a permutation of {ring.size} points")
        self.ring = ring
        self.image = image

    @classmethod
    def identity(cls, ring: Ring) -> PermutationTable:
        return cls(ring, range(ring.size))

    @classmethod
    def from_function_table(cls, table: FunctionTable) -> PermutationTable:
        if not table.is_bijective():
            raise NotBijective(f"{table!r} is not a bijection")
        return cls(table.ring, table.image)

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> PermutationTable:
        return cls.from_function_table(function_table(f))

    def compose(self, other: PermutationTable) -> PermutationTable:
        """self after other: (self . other)(x) = self(other(x))."""
        if other.ring != self.ring:
            raise MixedRings(f"composing permutations of {self.ring} and {other.ring}")
        img = self.image
        return PermutationTable(self.ring, tuple(img[j] for j in other.image))

    def inverse(self) -> PermutationTable:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return PermutationTable(self.ring, inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles as index tuples, each starting at its smallest point."""
        seen = [False] * len(self.image)
        out = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.image[i]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths, longest first."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        """(-1)^(points - cycles); -1 means an odd permutation."""
        return -1 if (len(self.image) - len(self.cycles())) % 2 else 1

    def to_function_table(self) -> FunctionTable:
        return FunctionTable(self.ring, self.image)

    def __eq__(self, other):
        if not isinstance(other, PermutationTable):
            return NotImplemented
        return self.ring == other.ring and self.image == other.image

    def __hash__(self):
        return hash((self.ring, self.image))

    def __repr__(self):
        return f"PermutationTable({list(self.image)}, {self.ring.spec()!r})"

    def to_json(self) -> dict:
        elems = self.ring.elements()
        return {
            "ring": self.ring.spec(),
            "image": [self.ring.format_element(elems[i]) for i in self.image],
            "cycle_type": list(self.cycle_type()),
            "sign": self.sign(),
        }


class GroupClosure:
    """A finite set of permutation tables closed under composition."""

    def __init__(self, ring: Ring, images: frozenset, generators=()):
        if tuple(range(ring.size)) not in images:
            raise ValueError("a permutation group must contain the identity")
        self.ring = ring
        self.elements = images
        self.generators = tuple(generators)
        self.order = len(images)

    def __contains__(self, perm) -> bool:
        if isinstance(perm, PermutationTable):
            return perm.ring == self.ring and perm.image in self.elements
        return tuple(perm) in self.elements

    def __len__(self) -> int:
        return self.order

    def members(self) -> list[PermutationTable]:
        """All members in lexicographic image order (deterministic)."""
        return [PermutationTable(self.ring, img) for img in sorted(self.elements)]

    def __repr__(self):
        return f"GroupClosure(order={self.order}, ring={self.ring.spec()!r})"


def generated_subgroup(generators) -> GroupClosure:
    """Smallest subgroup of S_R containing the generators.

    Breadth-first closure under right multiplication by generators; in a
    finite group that reaches inverses and the identity automatically.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise MixedRings("generators live in different rings")
    n = ring.size
    gen_rows = []
    seen = set()
    for g in gens:
        if g.image not in seen:
            seen.add(g.image)
            gen_rows.append(np.array(g.image, dtype=np.int32))
    ident = np.arange(n, dtype=np.int32)
    found = {ident.tobytes(): tuple(range(n))}
    frontier = [ident]
    while frontier:
        batch = np.stack(frontier)
        frontier = []
        for g in gen_rows:
            for row in batch[:, g]:
                key = row.tobytes()
                if key not in found:
                    found[key] = tuple(int(v) for v in row)
                    frontier.append(row)
    return GroupClosure(ring, frozenset(found.values()), generators=gens)


def all_polynomial_functions(ring: Ring, max_size: int = _CLOSURE_LIMIT) -> list[FunctionTable]:
    """Every function the ring's polynomials induce, in sorted table order.

    Seeded with the identity and constant functions: the distinct power
    maps x^0, x^1, x^2, ... are collected first (the sequence cycles), and
    the additive closure of their constant multiples is exactly the set of
    polynomial functions, since every polynomial is a sum of c * x^i terms.
    """
    if ring.size > max_size:
        raise RingTooLarge(f"{ring.spec()} has {ring.size} elements (bound {max_size})")
    tables = ring.op_tables()
    if tables is None:
        raise RingTooLarge(f"{ring.spec()} is too large for whole-ring closure")
    add_t, mul_t = tables
    n = ring.size
    ident = np.arange(n, dtype=np.int32)

    powers = []
    seen_pow = set()
    t = np.full(n, ring.index(ring.one), dtype=np.int32)
    while t.tobytes() not in seen_pow:
        seen_pow.add(t.tobytes())
        powers.append(t)
        t = mul_t[t, ident]

    gen_rows = []
    seen_gen = set()
    for power in powers:
        for c in range(n):
            row = mul_t[c, power]
            key = row.tobytes()
            if key not in seen_gen:
                seen_gen.add(key)
                gen_rows.append(row)

    zero_row = np.full(n, ring.index(ring.zero), dtype=np.int32)
    found = {zero_row.tobytes(): zero_row}
    frontier = [zero_row]
    while frontier:
        batch = np.stack(frontier)
        frontier = []
        for g in gen_rows:
            for row in add_t[batch, g[None, :]]:
                key = row.tobytes()
                if key not in found:
                    found[key] = row
                    frontier.append(row)
    rows = sorted(tuple(int(v) for v in row) for row in found.values())
    return [FunctionTable(ring, row) for row in rows]


def polynomial_permutation_group(ring: Ring, max_size: int = _CLOSURE_LIMIT) -> GroupClosure:
    """The group of all polynomial permutations of the ring.

    The whole symmetric group when the ring is a field; a proper subgroup
    otherwise.
    """
    n = ring.size
    full = set(range(n))
    images = frozenset(
        ft.image for ft in all_polynomial_functions(ring, max_size) if set(ft.image) == full
    )
    return GroupClosure(ring, images)
