"""Good homomorphisms between hyperrings and isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import HyperringTable, bits, mask_of, popcount, power
from .errors import HomomorphismError


def homomorphism_violation(
    source: HyperringTable, target: HyperringTable, mapping: Sequence[int]
) -> tuple | None:
    """First failing condition of a good homomorphism, or ``None``.

    Sums must map onto sums as sets: ``f(a + b) == f(a) + f(b)``.
    """
    if len(mapping) != source.n or any(not 0 <= v < target.n for v in mapping):
        return ("shape",)
    if mapping[source.zero] != target.zero:
        return ("zero", source.labels[source.zero])
    if mapping[source.one] != target.one:
        return ("one", source.labels[source.one])
    for a in range(source.n):
        for b in range(a, source.n):
            fa, fb = mapping[a], mapping[b]
            if mapping[source.mul[a][b]] != target.mul[fa][fb]:
                return ("mul", source.labels[a], source.labels[b])
            img = mask_of(mapping[z] for z in bits(source.add[a][b]))
            if img != target.add[fa][fb]:
                return ("add", source.labels[a], source.labels[b])
    return None


@dataclass(frozen=True, eq=False)
class GoodHomomorphism:
    """Element map ``source -> target`` preserving 0, 1, products and sums."""

    source: HyperringTable
    target: HyperringTable
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        bad = homomorphism_violation(self.source, self.target, self.mapping)
        if bad is not None:
            raise HomomorphismError(f"not a good homomorphism: {bad[0]} fails at {bad[1:]}", bad)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GoodHomomorphism):
            return NotImplemented
        return (self.source, self.target, self.mapping) == (other.source, other.target, other.mapping)

    def __hash__(self) -> int:
        return hash(self.mapping)

    def image_of(self, mask: int) -> int:
        return mask_of(self.mapping[x] for x in bits(mask))

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, v in enumerate(self.mapping) if mask >> v & 1)

    @property
    def kernel(self) -> int:
        return self.preimage(1 << self.target.zero)

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.n

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n

    def then(self, g: "GoodHomomorphism") -> "GoodHomomorphism":
        """The composite ``g o self``."""
        if g.source != self.target:
            raise HomomorphismError("homomorphisms are not composable")
        return GoodHomomorphism(self.source, g.target, tuple(g.mapping[v] for v in self.mapping))

    def inverse(self) -> "GoodHomomorphism":
        if not (self.injective and self.surjective):
            raise HomomorphismError("only bijections have inverses")
        inv = [0] * self.source.n
        for x, v in enumerate(self.mapping):
            inv[v] = x
        return GoodHomomorphism(self.target, self.source, tuple(inv))


def identity(table: HyperringTable) -> GoodHomomorphism:
    return GoodHomomorphism(table, table, tuple(range(table.n)))


def _signature(t: HyperringTable, x: int) -> tuple:
    seen, k = [], 1
    while True:
        p = power(t, x, k)
        if p in seen:
            break
        seen.append(p)
        k += 1
    return (
        x == t.zero,
        x == t.one,
        popcount(t.add[x][x]),
        tuple(sorted(popcount(t.add[x][y]) for y in range(t.n))),
        len(seen),
        sum(1 for y in range(t.n) if t.mul[x][y] == t.zero),
        t.mul[x][x] == x,
        sum(1 for y in range(t.n) if t.mul[x][y] == x),
    )


def find_isomorphism(a: HyperringTable, b: HyperringTable) -> GoodHomomorphism | None:
    """Search for a bijective good homomorphism ``a -> b``.

    Candidates are pruned by invariant signatures (additive spread, power
    orbit length, annihilator size) before backtracking.
    """
    n = a.n
    if n != b.n:
        return None
    sa = [_signature(a, x) for x in range(n)]
    sb = [_signature(b, y) for y in range(n)]
    if sorted(sa) != sorted(sb):
        return None
    cands = [[y for y in range(n) if sb[y] == sa[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cands[x]))
    f = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        fx = f[x]
        for y in range(n):
            fy = f[y]
            if fy < 0:
                continue
            p = f[a.mul[x][y]]
            if p >= 0 and p != b.mul[fx][fy]:
                return False
            s = a.add[x][y]
            target = b.add[fx][fy]
            if popcount(s) != popcount(target):
                return False
            for z in bits(s):
                fz = f[z]
                if fz >= 0 and not target >> fz & 1:
                    return False
        return True

    def go(i: int) -> bool:
        if i == n:
            return homomorphism_violation(a, b, f) is None
        x = order[i]
        for y in cands[x]:
            if used[y]:
                continue
            f[x] = y
            used[y] = True
            if consistent(x) and go(i + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if not go(0):
        return None
    return GoodHomomorphism(a, b, tuple(f))


def is_isomorphic(a: HyperringTable, b: HyperringTable) -> bool:
    return find_isomorphism(a, b) is not None
