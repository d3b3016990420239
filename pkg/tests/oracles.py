"""Reference implementations written directly from the definitions.

These deliberately avoid the package's bitmask machinery: elements are
labels, sets are Python frozensets, and every check is a plain loop over
the axiom or definition text.  Tests compare the library against these.
"""

from __future__ import annotations

from itertools import combinations, product


class Plain:
    """A hyperring as label-indexed dictionaries."""

    def __init__(self, table):
        self.elems = list(table.labels)
        self.zero = table.labels[table.zero]
        self.one = table.labels[table.one]
        self.plus = {
            (table.labels[i], table.labels[j]): frozenset(table.names(table.add[i][j]))
            for i in range(table.n)
            for j in range(table.n)
        }
        self.times = {
            (table.labels[i], table.labels[j]): table.labels[table.mul[i][j]]
            for i in range(table.n)
            for j in range(table.n)
        }

    def add(self, a, b):
        return self.plus[a, b]

    def mul(self, a, b):
        return self.times[a, b]

    def sumset(self, xs, ys):
        out = set()
        for x in xs:
            for y in ys:
                out |= self.plus[x, y]
        return frozenset(out)

    def neg(self, x):
        cands = [y for y in self.elems if self.zero in self.plus[x, y]]
        return cands[0] if len(cands) == 1 else None

    def diff(self, a, b):
        return self.plus[a, self.neg(b)]


def axiom_failures(t: Plain) -> list[str]:
    """Names of the Krasner axioms that fail, each checked by brute force."""
    E, fails = t.elems, []
    if any(t.add(x, y) != t.add(y, x) for x in E for y in E):
        fails.append("add-commutativity")
    if any(t.add(t.zero, x) != {x} for x in E):
        fails.append("zero-identity")
    negs = {x: [y for y in E if t.zero in t.add(x, y)] for x in E}
    if any(len(v) != 1 for v in negs.values()):
        fails.append("inverse")
    neg = {x: v[0] for x, v in negs.items() if len(v) == 1}
    # x in y + z  =>  z in x + (-y), wherever -y is well defined
    for x, y, z in product(E, repeat=3):
        if y in neg and x in t.add(y, z) and z not in t.add(x, neg[y]):
            fails.append("reversibility")
            break
    for x, y, z in product(E, repeat=3):
        left = set().union(*(t.add(w, z) for w in t.add(x, y)))
        right = set().union(*(t.add(x, w) for w in t.add(y, z)))
        if left != right:
            fails.append("add-associativity")
            break
    if any(t.mul(x, y) != t.mul(y, x) for x in E for y in E):
        fails.append("mul-commutativity")
    if any(t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)) for x, y, z in product(E, repeat=3)):
        fails.append("mul-associativity")
    if any(t.mul(t.one, x) != x for x in E):
        fails.append("mul-identity")
    if any(t.mul(t.zero, x) != t.zero for x in E):
        fails.append("zero-absorbing")
    for x, y, z in product(E, repeat=3):
        if {t.mul(x, w) for w in t.add(y, z)} != t.add(t.mul(x, y), t.mul(x, z)):
            fails.append("distributivity")
            break
    if len(E) > 1 and t.zero == t.one:
        fails.append("zero-neq-one")
    return fails


def powerset(elems):
    for k in range(len(elems) + 1):
        yield from (frozenset(c) for c in combinations(elems, k))


def is_ideal(t: Plain, s) -> bool:
    """Nonempty, closed under differences, absorbing."""
    if not s:
        return False
    for a in s:
        for b in s:
            if not t.diff(a, b) <= s:
                return False
        for r in t.elems:
            if t.mul(r, a) not in s:
                return False
    return True


def all_ideals(t: Plain) -> set[frozenset]:
    rest = [x for x in t.elems if x != t.zero]
    return {s | {t.zero} for s in powerset(rest) if is_ideal(t, s | {t.zero})}


def is_prime(t: Plain, p) -> bool:
    if p == frozenset(t.elems):
        return False
    return all(
        a in p or b in p for a in t.elems for b in t.elems if t.mul(a, b) in p
    )


def is_maximal(t: Plain, m, ideals) -> bool:
    full = frozenset(t.elems)
    return m != full and not any(m < j < full for j in ideals)


def nilradical(t: Plain) -> frozenset:
    out = set()
    for x in t.elems:
        y = x
        for _ in range(len(t.elems) + 1):
            if y == t.zero:
                out.add(x)
                break
            y = t.mul(y, x)
    return frozenset(out)


def radical(t: Plain, s) -> frozenset:
    out = set()
    for x in t.elems:
        y = t.one
        for _ in range(len(t.elems) + 1):
            y = t.mul(y, x)
            if y in s:
                out.add(x)
                break
    return frozenset(out)


def generated(t: Plain, gens, ideals) -> frozenset:
    """Least ideal containing ``gens`` (intersection over enumerated ideals)."""
    out = frozenset(t.elems)
    for i in ideals:
        if gens <= i:
            out &= i
    return out


def zmod_primes(n: int) -> list[frozenset[int]]:
    """Primes of Z/n: the ideals pZ/n for prime divisors p of n."""
    ps = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    return [frozenset(range(0, n, p)) for p in ps]


def zmod_nil(n: int) -> frozenset[int]:
    rad = 1
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            rad *= p
    return frozenset(range(0, n, rad))


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [part[k] | {head}] + part[k + 1:]
        yield part + [frozenset({head})]


def strongly_regular(t: Plain, blocks) -> bool:
    """x ~ y forces every element of x+z to be related to every element of y+z,
    and xz ~ yz, for every z."""
    cls = {x: i for i, b in enumerate(blocks) for x in b}
    for b in blocks:
        for x in b:
            for y in b:
                for z in t.elems:
                    if cls[t.mul(x, z)] != cls[t.mul(y, z)]:
                        return False
                    if len({cls[w] for w in t.add(x, z) | t.add(y, z)}) != 1:
                        return False
    return True


def gamma_blocks(t: Plain) -> set[frozenset]:
    """gamma*: transitive closure of co-membership in finite sums of elements."""
    sums = {frozenset({x}) for x in t.elems}
    frontier = set(sums)
    while frontier:
        new = set()
        for s in frontier:
            for x in t.elems:
                u = t.sumset(s, {x})
                if u not in sums:
                    new.add(u)
        sums |= new
        frontier = new
    cls = {x: {x} for x in t.elems}
    for s in sums:
        merged = set().union(*(cls[x] for x in s))
        for x in merged:
            cls[x] = merged
    return {frozenset(v) for v in cls.values()}
