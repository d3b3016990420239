"""Strongly regular relations and the fundamental relation gamma*.

An equivalence relation is stored as its partition: a tuple of disjoint
element masks ordered by least element, plus the block index of every
element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .core import HyperringTable, bits, hypersum, is_subset, mask_of, power
from .errors import CapacityError, DomainError, StructureError
from .homomorphisms import GoodHomomorphism, find_isomorphism
from .ideals import (
    DEFAULT_CAP,
    Hyperideal,
    coset_partition,
    ideal_masks,
    is_maximal_mask,
    is_prime_mask,
    prime_masks,
    quotient,
    table_from_partition,
)


@dataclass(frozen=True, eq=False)
class EquivRelation:
    table: HyperringTable
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for b in self.blocks:
            if not isinstance(b, int) or b <= 0:
                raise StructureError("partition blocks must be nonempty")
            if b & seen:
                raise StructureError("partition blocks overlap")
            seen |= b
        if seen != self.table.full:
            raise StructureError("partition does not cover the carrier")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=lambda b: b & -b)))

    @classmethod
    def from_class_map(cls, table: HyperringTable, class_of) -> "EquivRelation":
        groups: dict = {}
        for x, c in enumerate(class_of):
            groups[c] = groups.get(c, 0) | 1 << x
        return cls(table, tuple(groups.values()))

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * self.table.n
        for k, b in enumerate(self.blocks):
            for x in bits(b):
                out[x] = k
        return tuple(out)

    def block_of(self, x: int) -> int:
        return self.blocks[self.class_of[x]]

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    @property
    def kernel_mask(self) -> int:
        return self.block_of(self.table.zero)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EquivRelation):
            return NotImplemented
        return self.blocks == other.blocks and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __le__(self, other: "EquivRelation") -> bool:
        """Containment of relations: every block of ``self`` lies in a block of ``other``."""
        return all(is_subset(b, other.block_of(bits(b)[0])) for b in self.blocks)

    def pairs(self) -> set[tuple[int, int]]:
        return {(x, y) for b in self.blocks for x in bits(b) for y in bits(b)}

    def describe(self) -> str:
        return "{" + ", ".join(self.table.fmt(b) for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"EquivRelation{self.describe()}"


class StronglyRegularRelation(EquivRelation):
    """An :class:`EquivRelation` already known to be strongly regular."""

    @property
    def kernel(self) -> Hyperideal:
        return Hyperideal(self.table, self.kernel_mask)


def _union_find_blocks(n: int, groups) -> tuple[int, ...]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in groups:
        members = bits(g)
        for y in members[1:]:
            a, b = find(members[0]), find(y)
            if a != b:
                parent[max(a, b)] = min(a, b)
    out: dict = {}
    for x in range(n):
        r = find(x)
        out[r] = out.get(r, 0) | 1 << x
    return tuple(out.values())


def join(r: EquivRelation, s: EquivRelation) -> EquivRelation:
    """Smallest equivalence containing both (transitive closure of the union)."""
    return EquivRelation(r.table, _union_find_blocks(r.table.n, r.blocks + s.blocks))


def meet(r: EquivRelation, s: EquivRelation) -> EquivRelation:
    return EquivRelation(r.table, tuple(a & b for a in r.blocks for b in s.blocks if a & b))


def identity_relation(table: HyperringTable) -> EquivRelation:
    return EquivRelation(table, tuple(1 << x for x in range(table.n)))


def total_relation(table: HyperringTable) -> EquivRelation:
    return EquivRelation(table, (table.full,))


def is_strongly_regular(table: HyperringTable, rel: EquivRelation) -> bool:
    """Block sums must land in a single block; block products too."""
    if rel.table != table:
        raise StructureError("relation belongs to a different hyperring")
    cls = rel.class_of
    for a in rel.blocks:
        for b in rel.blocks:
            s = hypersum(table, a, b)
            if len({cls[z] for z in bits(s)}) != 1:
                return False
            prods = {cls[table.mul[x][y]] for x in bits(a) for y in bits(b)}
            if len(prods) != 1:
                return False
    return True


def as_strongly_regular(rel: EquivRelation) -> StronglyRegularRelation:
    if not is_strongly_regular(rel.table, rel):
        raise DomainError(f"{rel.describe()} is not strongly regular")
    return StronglyRegularRelation(rel.table, rel.blocks)


# --------------------------------------------------------------------------
# gamma*


def reachable_sums(table: HyperringTable, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """Every set ``x1 + ... + xk`` (k >= 1) as a mask.

    Products of elements are elements (multiplication is single valued),
    so the finite sums of products reduce to sums of elements.
    """
    if table.n > cap:
        raise CapacityError(f"carrier of size {table.n} exceeds enumeration cap {cap}")
    return _reachable_sums(table)


@lru_cache(maxsize=256)
def _reachable_sums(table: HyperringTable) -> frozenset[int]:
    n, add = table.n, table.add
    seen = {1 << x for x in range(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            members = bits(u)
            for x in range(n):
                v = 0
                for y in members:
                    v |= add[y][x]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def gamma_star(table: HyperringTable, cap: int = DEFAULT_CAP) -> StronglyRegularRelation:
    """The fundamental relation: transitive closure of co-membership in a sum."""
    sums = reachable_sums(table, cap)
    blocks = _union_find_blocks(table.n, sorted(sums))
    return as_strongly_regular(EquivRelation(table, blocks))


def gamma_kernel(table: HyperringTable, cap: int = DEFAULT_CAP) -> Hyperideal:
    return gamma_star(table, cap).kernel


def relation_from_ideal(table: HyperringTable, i) -> StronglyRegularRelation:
    """Congruence modulo ``I``: ``x ~ y`` iff ``x + I == y + I``."""
    m = i.mask if isinstance(i, Hyperideal) else i
    g0 = gamma_star(table, max(table.n, DEFAULT_CAP)).kernel_mask
    if not is_subset(g0, m):
        raise DomainError(
            f"{table.fmt(m)} is not normal: it must contain gamma*(0) = {table.fmt(g0)}"
        )
    if m == table.full:
        return StronglyRegularRelation(table, (table.full,))
    return as_strongly_regular(EquivRelation(table, tuple(coset_partition(table, m))))


def enumerate_strongly_regular(
    table: HyperringTable, cap: int = DEFAULT_CAP
) -> list[StronglyRegularRelation]:
    """One relation per hyperideal containing gamma*(0), the total relation included."""
    g0 = gamma_star(table, cap).kernel_mask
    return [relation_from_ideal(table, m) for m in ideal_masks(table, cap) if is_subset(g0, m)]


@dataclass(frozen=True)
class RelationProperties:
    prime: bool
    primitive: bool
    maximal: bool


def _prime_by_definition(rel: EquivRelation) -> bool:
    t, k = rel.table, rel.kernel_mask
    return all(
        not k >> t.mul[x][y] & 1 or k >> x & 1 or k >> y & 1
        for x in range(t.n)
        for y in range(t.n)
    )


def is_primitive(rel: EquivRelation) -> bool:
    t, k = rel.table, rel.kernel_mask
    for x in range(t.n):
        if k >> x & 1:
            continue
        for y in range(t.n):
            if k >> t.mul[x][y] & 1 and not any(
                k >> power(t, y, e) & 1 for e in range(1, t.n + 1)
            ):
                return False
    return True


def relation_properties(rel: StronglyRegularRelation, cap: int = DEFAULT_CAP) -> RelationProperties:
    t, k = rel.table, rel.kernel_mask
    prime = is_prime_mask(t, k)
    direct = _prime_by_definition(rel) and k != t.full
    if prime != direct:
        raise AssertionError(f"kernel primality and the relation definition disagree on {rel!r}")
    return RelationProperties(prime=prime, primitive=is_primitive(rel), maximal=is_maximal_mask(t, k, cap))


@dataclass(frozen=True)
class RingQuotient:
    ring: HyperringTable
    projection: GoodHomomorphism
    # R/rho -> R/rho(0), found by search; None when the kernel is the whole ring
    iso_to_ideal_quotient: GoodHomomorphism | None


def quotient_ring(rel: StronglyRegularRelation) -> RingQuotient:
    """``R / rho`` with singleton block sums, matched against ``R / rho(0)``."""
    t = rel.table
    if not is_strongly_regular(t, rel):
        raise DomainError(f"{rel.describe()} is not strongly regular")
    base = t.name or "R"
    ring, cls = table_from_partition(t, list(rel.blocks), name=f"{base}/rho")
    proj = GoodHomomorphism(t, ring, cls)
    iso = None
    if rel.kernel_mask != t.full:
        q, _ = quotient(t, rel.kernel_mask)
        iso = find_isomorphism(ring, q)
        if iso is None:
            raise AssertionError(f"R/rho and R/rho(0) are not isomorphic for {rel!r}")
    return RingQuotient(ring, proj, iso)


# --------------------------------------------------------------------------
# spectra


@dataclass(frozen=True)
class SpecCorrespondence:
    """Primes of ``R`` containing gamma*(0) matched with primes of ``R/gamma*``."""

    pairs: tuple[tuple[int, int], ...]  # (prime of R, prime of R/gamma*) masks
    excluded: tuple[int, ...]  # primes of R not containing gamma*(0)
    quotient_primes: tuple[int, ...]
    fundamental_ring: HyperringTable
    projection: GoodHomomorphism

    @property
    def bijective(self) -> bool:
        left = [p for p, _ in self.pairs]
        right = [q for _, q in self.pairs]
        return (
            len(set(left)) == len(left)
            and len(set(right)) == len(right)
            and sorted(right) == sorted(self.quotient_primes)
        )


def fundamental_spec_correspondence(
    table: HyperringTable, cap: int = DEFAULT_CAP
) -> SpecCorrespondence:
    g = gamma_star(table, cap)
    rq = quotient_ring(g)
    proj = rq.projection
    g0 = g.kernel_mask
    q_primes = prime_masks(rq.ring, max(cap, rq.ring.n))
    pairs, excluded = [], []
    for p in prime_masks(table, cap):
        if not is_subset(g0, p):
            excluded.append(p)
            continue
        image = proj.image_of(p)
        pairs.append((p, image))
    # every prime of the fundamental ring pulls back to a saturated prime
    for q in q_primes:
        back = proj.preimage(q)
        if (back, q) not in pairs:
            pairs.append((back, q))
    return SpecCorrespondence(
        tuple(pairs), tuple(excluded), tuple(q_primes), rq.ring, proj
    )


@dataclass(frozen=True)
class RelationSpectrum:
    points: tuple[StronglyRegularRelation, ...]
    relations: tuple[StronglyRegularRelation, ...]
    closed_sets: frozenset[int]  # masks over ``points``
    kernels: tuple[int, ...]  # kernel masks of the points
    join_law: bool  # V(rho v sigma) == V(rho) & V(sigma) on all pairs
    meet_law: bool  # V(rho ^ sigma) == V(rho) | V(sigma) on all pairs
    homeomorphic: bool  # rho -> rho(0) onto the subspace V(gamma*(0))

    def vanishing(self, rel: EquivRelation) -> int:
        return mask_of(k for k, tau in enumerate(self.points) if rel <= tau)


def relation_spectrum(table: HyperringTable, cap: int = DEFAULT_CAP) -> RelationSpectrum:
    """Prime strongly regular relations with closed sets ``V(rho)``."""
    rels = enumerate_strongly_regular(table, cap)
    pts = tuple(r for r in rels if is_prime_mask(table, r.kernel_mask))

    def v(rel):
        return mask_of(k for k, tau in enumerate(pts) if rel <= tau)

    closed = frozenset(v(r) for r in rels)
    by_blocks = {r.blocks: r for r in rels}
    join_ok = meet_ok = True
    for a in rels:
        for b in rels:
            j, m = join(a, b), meet(a, b)
            if j.blocks not in by_blocks or m.blocks not in by_blocks:
                join_ok = meet_ok = False
                continue
            join_ok &= v(j) == v(a) & v(b)
            meet_ok &= v(m) == v(a) | v(b)

    # compare with the subspace V(gamma*(0)) of Spec(R)
    g0 = gamma_star(table, cap).kernel_mask
    primes = prime_masks(table, cap)
    sub = [p for p in primes if is_subset(g0, p)]
    kernels = tuple(r.kernel_mask for r in pts)
    points_ok = sorted(kernels) == sorted(sub) and len(set(kernels)) == len(kernels)
    sub_closed = set()
    for m in ideal_masks(table, cap):
        sub_closed.add(mask_of(k for k, p in enumerate(kernels) if is_subset(m, p)))
    homeo = points_ok and sub_closed == set(closed)
    return RelationSpectrum(pts, tuple(rels), closed, kernels, join_ok, meet_ok, homeo)
