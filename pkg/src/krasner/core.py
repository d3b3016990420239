"""Finite commutative Krasner hyperrings stored as Cayley-style tables.

Elements are the dense indices ``0..n-1``; labels only matter for display
and serialization.  Subsets of the carrier ("element sets") are plain
``int`` bitmasks, bit ``i`` standing for element ``i``.  Hyperaddition is an
``n x n`` table of nonempty masks, multiplication an ``n x n`` table of
element indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as _cartesian
from typing import Iterable, Sequence

from .errors import AxiomError, StructureError

MAX_CARRIER = 64


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True, eq=False)
class HyperringTable:
    """An immutable finite hyperring table.

    ``add[x][y]`` is the bitmask of ``x + y`` and ``mul[x][y]`` the index of
    ``x * y``.  Construction only performs structural checks; axioms are
    checked by :func:`validate_axioms`.
    """

    labels: tuple[str, ...]
    zero: int
    one: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise StructureError("carrier must be nonempty")
        if n > MAX_CARRIER:
            raise StructureError(f"carrier size {n} exceeds the {MAX_CARRIER}-element format cap")
        if len(set(self.labels)) != n:
            raise StructureError("element labels must be distinct")
        for what, v in (("zero", self.zero), ("one", self.one)):
            if not (isinstance(v, int) and 0 <= v < n):
                raise StructureError(f"{what} index {v!r} out of range")
        full = (1 << n) - 1
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise StructureError(f"add table must be {n}x{n}")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise StructureError(f"mul table must be {n}x{n}")
        for x, row in enumerate(self.add):
            for y, cell in enumerate(row):
                if not isinstance(cell, int) or cell <= 0 or cell & ~full:
                    raise StructureError(
                        f"add[{self.labels[x]}][{self.labels[y]}] must be a nonempty subset of the carrier"
                    )
        for x, row in enumerate(self.mul):
            for y, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise StructureError(f"mul[{self.labels[x]}][{self.labels[y]}] = {v!r} out of range")

    @classmethod
    def from_sets(
        cls,
        labels: Sequence[str],
        zero: int,
        one: int,
        add: Sequence[Sequence[Iterable[int]]],
        mul: Sequence[Sequence[int]],
        name: str = "",
    ) -> "HyperringTable":
        """Build a table whose ``add`` cells are given as iterables of indices."""
        n = len(labels)
        try:
            add_masks = []
            for row in add:
                out_row = []
                for cell in row:
                    cell = list(cell)
                    for i in cell:
                        if not (isinstance(i, int) and 0 <= i < n):
                            raise StructureError(f"add cell references index {i!r} outside the carrier")
                    out_row.append(mask_of(cell))
                add_masks.append(tuple(out_row))
        except TypeError as exc:
            raise StructureError(f"add cells must be iterables of indices: {exc}") from None
        return cls(
            labels=tuple(labels),
            zero=zero,
            one=one,
            add=tuple(add_masks),
            mul=tuple(tuple(row) for row in mul),
            name=name,
        )

    # identity ---------------------------------------------------------

    @cached_property
    def _key(self):
        return (self.labels, self.zero, self.one, self.add, self.mul)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HyperringTable):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        name = f" {self.name!r}" if self.name else ""
        return f"<HyperringTable{name} n={self.n}>"

    # basic views ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def trivial(self) -> bool:
        """True for the one-element structure where ``0 == 1``."""
        return self.n == 1

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def element(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise StructureError(f"unknown element label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        """Bitmask of the elements with the given labels."""
        return mask_of(self.element(lab) for lab in labels)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    @cached_property
    def is_ring(self) -> bool:
        """All sums are singletons."""
        return all(popcount(c) == 1 for row in self.add for c in row)

    @cached_property
    def _neg(self) -> tuple[int, ...] | None:
        out = []
        zb = 1 << self.zero
        for x in range(self.n):
            cands = [y for y in range(self.n) if self.add[x][y] & zb]
            if len(cands) != 1:
                return None
            out.append(cands[0])
        return tuple(out)

    @cached_property
    def _diff(self) -> tuple[tuple[int, ...], ...]:
        """``_diff[a][b]`` is the mask of ``a - b``."""
        neg = [negate(self, x) for x in range(self.n)]
        return tuple(tuple(self.add[a][neg[b]] for b in range(self.n)) for a in range(self.n))


def _check_mask(table: HyperringTable, m: int) -> int:
    if not isinstance(m, int) or m < 0 or m & ~table.full:
        raise StructureError(f"element set {m!r} is not a subset of the carrier")
    return m


def _check_element(table: HyperringTable, x: int) -> int:
    if not isinstance(x, int) or not 0 <= x < table.n:
        raise StructureError(f"element index {x!r} out of range")
    return x


def hypersum(table: HyperringTable, a: int, b: int) -> int:
    """Union of ``x + y`` over ``x in a`` and ``y in b`` (masks in, mask out)."""
    _check_mask(table, a)
    _check_mask(table, b)
    out = 0
    add = table.add
    for x in bits(a):
        row = add[x]
        for y in bits(b):
            out |= row[y]
    return out


def negate(table: HyperringTable, x: int) -> int:
    """The unique ``x'`` with ``0 in x + x'``."""
    _check_element(table, x)
    neg = table._neg
    if neg is not None:
        return neg[x]
    zb = 1 << table.zero
    cands = [y for y in range(table.n) if table.add[x][y] & zb]
    if len(cands) == 1:
        return cands[0]
    raise AxiomError(
        f"element {table.labels[x]!r} has {len(cands)} additive inverses; validate the table first"
    )


def negate_set(table: HyperringTable, a: int) -> int:
    return mask_of(negate(table, x) for x in bits(a))


def power(table: HyperringTable, x: int, k: int) -> int:
    """``x**k`` for ``k >= 0`` (``x**0 == 1``)."""
    out = table.one
    for _ in range(k):
        out = table.mul[out][x]
    return out


def image(table: HyperringTable, r: int, a: int) -> int:
    """Mask of ``{r*x : x in a}``."""
    row = table.mul[r]
    return mask_of(row[x] for x in bits(a))


# --------------------------------------------------------------------------
# axiom validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.axiom}({', '.join(self.witness)})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    trivial: bool = False

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> list[str]:
        return sorted({v.axiom for v in self.violations})

    def __bool__(self) -> bool:
        return self.valid


def _inverse_count(t: HyperringTable, x: int) -> int:
    zb = 1 << t.zero
    return sum(1 for y in range(t.n) if t.add[x][y] & zb)


def _unique_neg(t: HyperringTable, x: int) -> int | None:
    zb = 1 << t.zero
    c = [y for y in range(t.n) if t.add[x][y] & zb]
    return c[0] if len(c) == 1 else None


def _rev_holds(t: HyperringTable, x: int, y: int, z: int) -> bool:
    if not t.add[x][y] >> z & 1:
        return True
    nx, ny = _unique_neg(t, x), _unique_neg(t, y)
    if nx is None or ny is None:
        # reported under "inverse" instead
        return True
    return bool(t.add[nx][z] >> y & 1) and bool(t.add[z][ny] >> x & 1)


def _assoc_holds(t: HyperringTable, x: int, y: int, z: int) -> bool:
    return hypersum(t, t.add[x][y], 1 << z) == hypersum(t, 1 << x, t.add[y][z])


def _dist_holds(t: HyperringTable, x: int, y: int, z: int) -> bool:
    return image(t, x, t.add[y][z]) == t.add[t.mul[x][y]][t.mul[x][z]]


# axiom name -> (arity, predicate on indices); order is the reporting order
AXIOMS = {
    "add-commutativity": (2, lambda t, x, y: t.add[x][y] == t.add[y][x]),
    "zero-identity": (1, lambda t, x: t.add[t.zero][x] == 1 << x),
    "inverse": (1, lambda t, x: _inverse_count(t, x) == 1),
    "reversibility": (3, _rev_holds),
    "add-associativity": (3, _assoc_holds),
    "mul-commutativity": (2, lambda t, x, y: t.mul[x][y] == t.mul[y][x]),
    "mul-associativity": (3, lambda t, x, y, z: t.mul[t.mul[x][y]][z] == t.mul[x][t.mul[y][z]]),
    "mul-identity": (1, lambda t, x: t.mul[t.one][x] == x),
    "zero-absorbing": (1, lambda t, x: t.mul[t.zero][x] == t.zero),
    "distributivity": (3, _dist_holds),
    "zero-neq-one": (0, lambda t: t.n == 1 or t.zero != t.one),
}


def validate_axioms(table: HyperringTable) -> ValidationReport:
    """Check every Krasner hyperring axiom, collecting all violations.

    Additive axioms come first, then multiplicative ones, then
    distributivity.  Witnesses are tuples of element labels.
    """
    found = []
    rng = range(table.n)
    for name, (arity, holds) in AXIOMS.items():
        for args in _cartesian(rng, repeat=arity):
            if not holds(table, *args):
                found.append(Violation(name, tuple(table.labels[i] for i in args)))
    return ValidationReport(tuple(found), trivial=table.trivial)


def replay(table: HyperringTable, violation: Violation) -> bool:
    """True if ``violation`` still reproduces on ``table``."""
    arity, holds = AXIOMS[violation.axiom]
    args = [table.element(w) for w in violation.witness]
    if len(args) != arity:
        raise ValueError(f"{violation.axiom} takes {arity} witnesses, got {len(args)}")
    return not holds(table, *args)


def require_valid(table: HyperringTable) -> HyperringTable:
    report = validate_axioms(table)
    if not report.valid:
        shown = ", ".join(str(v) for v in report.violations[:5])
        raise AxiomError(f"{table!r} is not a Krasner hyperring: {shown}")
    return table


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class StructureClass:
    commutative_unital: bool
    hyperfield: bool
    hyperdomain: bool
    has_nontrivial_idempotent: bool
    idempotents: int
    ring: bool


def idempotents(table: HyperringTable) -> int:
    return mask_of(x for x in range(table.n) if table.mul[x][x] == x)


def nontrivial_idempotents(table: HyperringTable) -> list[int]:
    return [x for x in bits(idempotents(table)) if x not in (table.zero, table.one)]


def units(table: HyperringTable) -> int:
    return mask_of(x for x in range(table.n) if table.one in table.mul[x])


def classify(table: HyperringTable) -> StructureClass:
    """Hyperfield / hyperdomain / idempotent summary of a validated table."""
    n, z = table.n, table.zero
    nonzero = [x for x in range(n) if x != z]
    domain = n > 1 and all(table.mul[a][b] != z for a in nonzero for b in nonzero)
    # a domain whose nonzero elements are all units is a hyperfield
    field_ = domain and all(table.one in table.mul[a] for a in nonzero)
    idem = idempotents(table)
    return StructureClass(
        commutative_unital=validate_axioms(table).valid,
        hyperfield=field_,
        hyperdomain=domain,
        has_nontrivial_idempotent=bool(nontrivial_idempotents(table)),
        idempotents=idem,
        ring=table.is_ring,
    )
