"""A fixed corpus of small valid hyperrings, used by the test suites.

Members are built on demand and cached.  Every carrier has 2 to 10
elements.
"""

from __future__ import annotations

from functools import lru_cache

from .constructions import ZMod, product, ring_mod_subgroup, zmod
from .core import HyperringTable
from .ideals import quotient
from .io import bundled

# (ring modulus, unit subgroup) pairs for the orbit construction
ORBITS = (
    (3, (1, 2)),
    (4, (1, 3)),
    (5, (1, 2, 3, 4)),
    (5, (1, 4)),
    (6, (1, 5)),
    (7, (1, 6)),
    (7, (1, 2, 4)),
    (8, (1, 3, 5, 7)),
    (8, (1, 7)),
    (9, (1, 8)),
    (10, (1, 9)),
    (12, (1, 5, 7, 11)),
)


def krasner_field() -> HyperringTable:
    """The two-element hyperfield with ``1 + 1 = {0, 1}``."""
    return ring_mod_subgroup(ZMod(3), (1, 2), name="K")[0]


def _r8_quotient(labels: str) -> HyperringTable:
    r8 = bundled("r8")
    q, _ = quotient(r8, r8.mask(labels))
    return HyperringTable(q.labels, q.zero, q.one, q.add, q.mul, name=f"R8/{{{','.join(labels)}}}")


@lru_cache(maxsize=None)
def corpus() -> tuple[HyperringTable, ...]:
    k = krasner_field()
    members = [bundled("r8")]
    members += [zmod(n) for n in range(2, 11)]
    members += [
        product(zmod(2), zmod(2)),
        product(zmod(2), zmod(3)),
        product(zmod(2), zmod(5)),
        product(zmod(2), zmod(4)),
        product(k, k),
        product(k, zmod(3)),
        product(k, zmod(4)),
    ]
    members += [ring_mod_subgroup(ZMod(n), g)[0] for n, g in ORBITS]
    members += [_r8_quotient(s) for s in ("0c", "0d", "0acd", "0bdf")]
    members.append(product(k, _r8_quotient("0d")))
    return tuple(members)


def by_name(name: str) -> HyperringTable:
    for t in corpus():
        if t.name == name:
            return t
    raise KeyError(name)


def small(limit: int) -> tuple[HyperringTable, ...]:
    return tuple(t for t in corpus() if t.n <= limit)
