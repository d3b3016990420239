"""Hyperideals: recognition, generation, arithmetic, radicals and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    HyperringTable,
    bits,
    classify,
    hypersum,
    is_subset,
    mask_of,
    popcount,
    power,
    validate_axioms,
)
from .errors import CapacityError, ConsistencyError, DomainError
from .homomorphisms import GoodHomomorphism

DEFAULT_CAP = 16


@dataclass(frozen=True, eq=False)
class Hyperideal:
    """A hyperideal of ``table`` given by its membership mask."""

    table: HyperringTable
    mask: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hyperideal):
            return NotImplemented
        return self.mask == other.mask and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __le__(self, other: "Hyperideal") -> bool:
        return is_subset(self.mask, other.mask)

    def __lt__(self, other: "Hyperideal") -> bool:
        return self.mask != other.mask and is_subset(self.mask, other.mask)

    @property
    def members(self) -> list[int]:
        return bits(self.mask)

    @property
    def labels(self) -> list[str]:
        return self.table.names(self.mask)

    @property
    def proper(self) -> bool:
        return self.mask != self.table.full

    def __repr__(self) -> str:
        return f"Hyperideal{self.table.fmt(self.mask)}"

    def sort_key(self) -> tuple[int, int]:
        return ideal_key(self.mask)


def ideal_key(mask: int) -> tuple[int, int]:
    """Canonical order: by size, then by mask value."""
    return (popcount(mask), mask)


def as_mask(table: HyperringTable, s) -> int:
    """Accept a mask, a :class:`Hyperideal` or an iterable of indices."""
    if isinstance(s, Hyperideal):
        return s.mask
    if isinstance(s, int):
        return s
    return mask_of(s)


def is_hyperideal(table: HyperringTable, s) -> bool:
    """Nonempty, ``a - b`` inside for members ``a, b``, and absorbing ``r * a``."""
    m = as_mask(table, s)
    if m == 0 or m & ~table.full:
        return False
    diff = table._diff
    members = bits(m)
    for a in members:
        row = diff[a]
        for b in members:
            if row[b] & ~m:
                return False
    for r in range(table.n):
        mrow = table.mul[r]
        for a in members:
            if not m >> mrow[a] & 1:
                return False
    return True


def closure_mask(table: HyperringTable, m: int) -> int:
    """Least hyperideal mask containing ``m``."""
    m |= 1 << table.zero
    diff, mul = table._diff, table.mul
    while True:
        new = m
        members = bits(m)
        for a in members:
            row = diff[a]
            for b in members:
                new |= row[b]
            for r in range(table.n):
                new |= 1 << mul[r][a]
        if new == m:
            return m
        m = new


def ideal_generated_by(table: HyperringTable, s) -> Hyperideal:
    return Hyperideal(table, closure_mask(table, as_mask(table, s)))


def whole(table: HyperringTable) -> Hyperideal:
    return Hyperideal(table, table.full)


def zero_ideal(table: HyperringTable) -> Hyperideal:
    return Hyperideal(table, 1 << table.zero)


def product_mask(table: HyperringTable, a: int, b: int) -> int:
    return mask_of(table.mul[x][y] for x in bits(a) for y in bits(b))


def combine(i: Hyperideal, j: Hyperideal, mode: str) -> Hyperideal:
    """``mode`` is one of ``"sum"``, ``"product"``, ``"intersect"``."""
    if i.table != j.table:
        raise DomainError("hyperideals belong to different hyperrings")
    t = i.table
    if mode == "sum":
        return Hyperideal(t, closure_mask(t, hypersum(t, i.mask, j.mask)))
    if mode == "product":
        return Hyperideal(t, closure_mask(t, product_mask(t, i.mask, j.mask)))
    if mode == "intersect":
        return Hyperideal(t, i.mask & j.mask)
    raise ValueError(f"unknown combine mode {mode!r}")


def radical_mask(table: HyperringTable, m: int) -> int:
    # powers x, x^2, ..., x^n already run through the whole eventual cycle
    out = 0
    for x in range(table.n):
        for k in range(1, table.n + 1):
            if m >> power(table, x, k) & 1:
                out |= 1 << x
                break
    return out


def radical(i: Hyperideal) -> Hyperideal:
    return Hyperideal(i.table, radical_mask(i.table, i.mask))


def nilradical(table: HyperringTable) -> Hyperideal:
    return Hyperideal(table, radical_mask(table, 1 << table.zero))


# --------------------------------------------------------------------------
# enumeration


def _check_cap(table: HyperringTable, cap: int) -> None:
    if table.n > cap:
        raise CapacityError(f"carrier of size {table.n} exceeds enumeration cap {cap}")


@lru_cache(maxsize=512)
def _ideal_masks(table: HyperringTable) -> tuple[int, ...]:
    # every hyperideal is the sum of the principal ideals of its members,
    # so saturating the principal ideals under sums reaches all of them
    found = {1 << table.zero}
    principal = {closure_mask(table, 1 << x) for x in range(table.n)}
    found |= principal
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for p in principal:
                s = closure_mask(table, hypersum(table, a, p))
                if s not in found:
                    new.add(s)
        found |= new
        frontier = new
    return tuple(sorted(found, key=ideal_key))


def enumerate_hyperideals(table: HyperringTable, cap: int = DEFAULT_CAP) -> list[Hyperideal]:
    """All hyperideals, smallest first (ties broken by mask value)."""
    _check_cap(table, cap)
    return [Hyperideal(table, m) for m in _ideal_masks(table)]


def ideal_masks(table: HyperringTable, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    _check_cap(table, cap)
    return _ideal_masks(table)


def is_prime_mask(table: HyperringTable, m: int) -> bool:
    if m == table.full:
        return False
    for a in range(table.n):
        if m >> a & 1:
            continue
        row = table.mul[a]
        for b in range(table.n):
            if not m >> b & 1 and m >> row[b] & 1:
                return False
    return True


def is_maximal_mask(table: HyperringTable, m: int, cap: int = DEFAULT_CAP) -> bool:
    if m == table.full:
        return False
    return not any(
        o != m and o != table.full and is_subset(m, o) for o in ideal_masks(table, cap)
    )


@lru_cache(maxsize=512)
def _prime_masks(table: HyperringTable) -> tuple[int, ...]:
    return tuple(m for m in _ideal_masks(table) if is_prime_mask(table, m))


def prime_masks(table: HyperringTable, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    _check_cap(table, cap)
    return _prime_masks(table)


def spec(table: HyperringTable, cap: int = DEFAULT_CAP) -> list[Hyperideal]:
    """Prime hyperideals in canonical order."""
    return [Hyperideal(table, m) for m in prime_masks(table, cap)]


def mspec(table: HyperringTable, cap: int = DEFAULT_CAP) -> list[Hyperideal]:
    """Maximal hyperideals in canonical order."""
    return [Hyperideal(table, m) for m in ideal_masks(table, cap) if is_maximal_mask(table, m, cap)]


def is_local(table: HyperringTable, cap: int = DEFAULT_CAP) -> bool:
    return len(mspec(table, cap)) == 1


# --------------------------------------------------------------------------
# properties


@dataclass(frozen=True)
class IdealProperties:
    proper: bool
    prime: bool
    maximal: bool
    normal: bool
    radical_flag: bool


def is_normal_mask(table: HyperringTable, m: int) -> bool:
    """``x + I - x`` stays inside ``I`` for every ``x``."""
    diff = table._diff
    for x in range(table.n):
        shifted = hypersum(table, 1 << x, m)
        for y in bits(shifted):
            if diff[y][x] & ~m:
                return False
    return True


def ideal_properties(i: Hyperideal, cap: int = DEFAULT_CAP) -> IdealProperties:
    t, m = i.table, i.mask
    return IdealProperties(
        proper=m != t.full,
        prime=is_prime_mask(t, m),
        maximal=is_maximal_mask(t, m, cap),
        normal=is_normal_mask(t, m),
        radical_flag=radical_mask(t, m) == m,
    )


# --------------------------------------------------------------------------
# quotients


def coset(table: HyperringTable, x: int, m: int) -> int:
    return hypersum(table, 1 << x, m)


def coset_partition(table: HyperringTable, m: int) -> list[int]:
    """The distinct cosets ``x + I``, ordered by their least element.

    Raises :class:`ConsistencyError` if the cosets do not partition the
    carrier.
    """
    blocks = []
    seen = 0
    for x in range(table.n):
        c = coset(table, x, m)
        if not c >> x & 1:
            raise ConsistencyError(f"{table.labels[x]} not in its own coset {table.fmt(c)}")
        if seen >> x & 1:
            if c not in blocks:
                raise ConsistencyError(f"coset {table.fmt(c)} overlaps an earlier coset")
            continue
        if c & seen:
            raise ConsistencyError(f"coset {table.fmt(c)} overlaps an earlier coset")
        blocks.append(c)
        seen |= c
    if seen != table.full:
        raise ConsistencyError("cosets do not cover the carrier")
    return blocks


def table_from_partition(
    table: HyperringTable, blocks: list[int], name: str = ""
) -> tuple[HyperringTable, tuple[int, ...]]:
    """Induced structure on a partition: block sums are unions of element sums."""
    cls = [0] * table.n
    for k, b in enumerate(blocks):
        for x in bits(b):
            cls[x] = k
    reps = [bits(b)[0] for b in blocks]
    labels = tuple(f"[{table.labels[r]}]" for r in reps)
    add = []
    mul = []
    for bi in reps:
        arow, mrow = [], []
        for bj in reps:
            s = table.add[bi][bj]
            arow.append(mask_of(cls[z] for z in bits(s)))
            mrow.append(cls[table.mul[bi][bj]])
        add.append(tuple(arow))
        mul.append(tuple(mrow))
    out = HyperringTable(
        labels=labels,
        zero=cls[table.zero],
        one=cls[table.one],
        add=tuple(add),
        mul=tuple(mul),
        name=name,
    )
    return out, tuple(cls)


def quotient(table: HyperringTable, i) -> tuple[HyperringTable, GoodHomomorphism]:
    """``R / I`` together with the projection ``x -> x + I``."""
    m = as_mask(table, i)
    if not is_hyperideal(table, m):
        raise DomainError(f"{table.fmt(m)} is not a hyperideal")
    if m == table.full:
        raise DomainError("cannot form the quotient by the whole hyperring")
    blocks = coset_partition(table, m)
    base = table.name or "R"
    q, cls = table_from_partition(table, blocks, name=f"{base}/{table.fmt(m)}")
    return q, GoodHomomorphism(table, q, cls)


def quotient_is_hyperdomain(table: HyperringTable, i) -> bool:
    q, _ = quotient(table, i)
    return classify(q).hyperdomain


def quotient_is_hyperfield(table: HyperringTable, i) -> bool:
    q, _ = quotient(table, i)
    return validate_axioms(q).valid and classify(q).hyperfield
