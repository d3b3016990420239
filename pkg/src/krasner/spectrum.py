"""The Zariski topology on the prime spectrum as an explicit finite space.

Points are prime hyperideals (element masks) in canonical order.  Sets of
points are ``int`` masks over point positions: bit ``k`` is ``points[k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .core import HyperringTable, bits, is_subset, mask_of, nontrivial_idempotents, popcount
from .ideals import (
    DEFAULT_CAP,
    Hyperideal,
    ideal_masks,
    is_maximal_mask,
    is_prime_mask,
    nilradical,
    prime_masks,
)


@dataclass(frozen=True, eq=False)
class SpectrumSpace:
    """A finite space of primes with its family of closed sets.

    ``table`` is ``None`` for synthetic spaces built with :meth:`from_order`.
    """

    points: tuple[int, ...]
    closed_sets: frozenset[int]
    table: HyperringTable | None = None

    @classmethod
    def of(cls, table: HyperringTable, cap: int = DEFAULT_CAP) -> "SpectrumSpace":
        pts = prime_masks(table, cap)
        closed = frozenset(_vanishing(pts, m) for m in ideal_masks(table, cap))
        return cls(tuple(pts), closed, table)

    @classmethod
    def from_order(cls, points) -> "SpectrumSpace":
        """Space whose closed sets are the up-sets of ``points`` under inclusion.

        For a genuine finite spectrum these are exactly the ``V(I)``; here it
        lets chains of primes be modelled without a hyperring behind them.
        """
        pts = tuple(points)
        up = [mask_of(j for j, q in enumerate(pts) if is_subset(p, q)) for p in pts]
        closed = {0}
        for k in range(len(pts) + 1):
            for combo in combinations(range(len(pts)), k):
                m = 0
                for i in combo:
                    m |= up[i]
                closed.add(m)
        return cls(pts, frozenset(closed), None)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def everything(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def open_sets(self) -> frozenset[int]:
        return frozenset(self.everything & ~c for c in self.closed_sets)

    def ideals(self, pts: int) -> list[Hyperideal]:
        return [Hyperideal(self.table, self.points[k]) for k in bits(pts)]

    def index_of(self, prime_mask: int) -> int:
        return self.points.index(prime_mask)

    def is_closed(self, pts: int) -> bool:
        return pts in self.closed_sets

    def is_open(self, pts: int) -> bool:
        return pts in self.open_sets


def _vanishing(points, m: int) -> int:
    return mask_of(k for k, p in enumerate(points) if is_subset(m, p))


def vanishing_set(space: SpectrumSpace, s) -> int:
    """``V(S)``: the points containing ``S`` (an element mask or hyperideal)."""
    m = s.mask if isinstance(s, Hyperideal) else s
    return _vanishing(space.points, m)


def basic_open(space: SpectrumSpace, x: int) -> int:
    """``W(x)``: the points not containing ``x``."""
    return space.everything & ~vanishing_set(space, 1 << x)


def closure_of(space: SpectrumSpace, pts: int) -> int:
    """Closure as ``V`` of the intersection of the given primes."""
    if pts == 0:
        return 0
    inter = -1
    for k in bits(pts):
        inter &= space.points[k]
    return vanishing_set(space, inter)


def closure_direct(space: SpectrumSpace, pts: int) -> int:
    """Closure as the smallest closed superset."""
    out = space.everything
    for c in space.closed_sets:
        if is_subset(pts, c):
            out &= c
    return out


def specialization_covers(space: SpectrumSpace) -> list[tuple[int, int]]:
    """Hasse edges ``(i, j)``: ``points[i]`` strictly inside ``points[j]``, nothing between."""
    pts = space.points
    below = [
        [j for j, q in enumerate(pts) if p != q and is_subset(p, q)] for p in pts
    ]
    edges = []
    for i, ups in enumerate(below):
        for j in ups:
            if not any(is_subset(pts[k], pts[j]) for k in ups if k != j):
                edges.append((i, j))
    return edges


def dimension(space: SpectrumSpace) -> int:
    """Length of the longest strict chain of points (0 for an empty space)."""
    pts = space.points
    order = sorted(range(len(pts)), key=lambda k: popcount(pts[k]))
    height = {}
    for k in order:
        height[k] = max(
            (height[j] + 1 for j in height if pts[j] != pts[k] and is_subset(pts[j], pts[k])),
            default=0,
        )
    return max(height.values(), default=0)


def _irreducible_subset(space: SpectrumSpace, c: int) -> bool:
    if c == 0:
        return False
    inside = [a & c for a in space.open_sets if a & c]
    return all(u & v for u in inside for v in inside)


def irreducible_components(space: SpectrumSpace) -> list[int]:
    """Maximal irreducible closed subsets, in increasing mask order."""
    irr = [c for c in space.closed_sets if _irreducible_subset(space, c)]
    maximal = [c for c in irr if not any(d != c and is_subset(c, d) for d in irr)]
    return sorted(maximal)


def minimal_primes(space: SpectrumSpace) -> list[int]:
    pts = space.points
    return [
        k for k, p in enumerate(pts) if not any(q != p and is_subset(q, p) for q in pts)
    ]


@dataclass(frozen=True)
class Separation:
    t0: bool
    t1: bool
    t2: bool


def separation(space: SpectrumSpace) -> Separation:
    opens = space.open_sets
    n = space.size
    t0 = t1 = t2 = True
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            ab, bb = 1 << a, 1 << b
            if not any(u & ab and not u & bb for u in opens):
                t1 = False
                if not any(u & bb and not u & ab for u in opens):
                    t0 = False
            if not any(u & ab and v & bb and not u & v for u in opens for v in opens):
                t2 = False
    return Separation(t0, t1, t2)


def is_irreducible(space: SpectrumSpace) -> bool:
    return _irreducible_subset(space, space.everything)


def is_connected(space: SpectrumSpace) -> bool:
    full = space.everything
    return not any(c and c != full and (full & ~c) in space.closed_sets for c in space.closed_sets)


def disconnection(space: SpectrumSpace) -> tuple[int, int] | None:
    """A split into two nonempty disjoint closed sets, if there is one."""
    full = space.everything
    for c in sorted(space.closed_sets):
        if c and c != full and (full & ~c) in space.closed_sets:
            return c, full & ~c
    return None


def is_discrete(space: SpectrumSpace) -> bool:
    return all(
        space.is_closed(1 << k) and space.is_open(1 << k) for k in range(space.size)
    )


@dataclass(frozen=True)
class TopologyReport:
    irreducible: bool
    connected: bool
    components: tuple[int, ...]
    separation: Separation
    dimension: int
    discrete: bool
    # algebraic side, filled in when the space comes from a table
    nil_prime: bool | None = None
    has_nontrivial_idempotent: bool | None = None
    mspec_equals_spec: bool | None = None
    minimal_prime_components: tuple[int, ...] | None = None

    def disagreements(self) -> list[str]:
        """Names of the topology/algebra equivalences that fail on this space."""
        bad = []
        sep = self.separation
        if not sep.t0:
            bad.append("t0")
        if not (sep.t1 == sep.t2 == (self.dimension == 0)):
            bad.append("t1-t2-dim0")
        if self.nil_prime is not None and self.irreducible != self.nil_prime:
            bad.append("irreducible-nil-prime")
        if (
            self.has_nontrivial_idempotent is not None
            and self.connected == self.has_nontrivial_idempotent
        ):
            bad.append("connected-idempotent")
        if self.mspec_equals_spec is not None and self.mspec_equals_spec != sep.t1:
            bad.append("t1-mspec")
        if (
            self.minimal_prime_components is not None
            and self.minimal_prime_components != self.components
        ):
            bad.append("components-minimal-primes")
        return bad


def topology_report(space: SpectrumSpace) -> TopologyReport:
    """Topological summary computed from the open/closed families directly.

    When the space carries a table, the algebraic counterparts (primality
    of the nilradical, nontrivial idempotents, ``mSpec == Spec``, minimal
    primes) are computed independently so :meth:`TopologyReport.disagreements`
    can compare them.
    """
    comps = tuple(irreducible_components(space))
    extra = {}
    t = space.table
    if t is not None:
        extra = dict(
            nil_prime=is_prime_mask(t, nilradical(t).mask),
            has_nontrivial_idempotent=bool(nontrivial_idempotents(t)),
            mspec_equals_spec=all(is_maximal_mask(t, p, cap=t.n) for p in space.points),
            minimal_prime_components=tuple(
                sorted(closure_of(space, 1 << k) for k in minimal_primes(space))
            ),
        )
    return TopologyReport(
        irreducible=is_irreducible(space),
        connected=is_connected(space),
        components=comps,
        separation=separation(space),
        dimension=dimension(space),
        discrete=is_discrete(space),
        **extra,
    )
