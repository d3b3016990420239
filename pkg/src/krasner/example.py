"""Reproduction checklist for the bundled 8-element hyperring ``R8``."""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import zmod
from .core import HyperringTable, validate_axioms
from .homomorphisms import is_isomorphic
from .ideals import ideal_masks, ideal_properties, Hyperideal, mspec, quotient, radical, spec
from .io import bundled
from .relations import enumerate_strongly_regular, gamma_star, quotient_ring, relation_properties
from .spectrum import SpectrumSpace, vanishing_set


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str


def _sets(t: HyperringTable, masks) -> set[int]:
    return {t.mask(s) for s in masks}


def r8_claims(table: HyperringTable | None = None) -> list[Claim]:
    t = table if table is not None else bundled("r8")
    out = []

    def claim(name, ok, detail=""):
        out.append(Claim(name, bool(ok), detail))

    val = validate_axioms(t)
    claim("tables form a Krasner hyperring", val.valid, f"{len(val.violations)} violations")
    if not val.valid:
        return out

    g = gamma_star(t)
    want = _sets(t, ["0c", "1f", "ad", "be"])
    claim("gamma* partition is {0,c},{1,f},{a,d},{b,e}", set(g.blocks) == want, g.describe())
    claim("gamma*(0) = {0,c}", g.kernel_mask == t.mask("0c"), t.fmt(g.kernel_mask))
    props = relation_properties(g)
    claim("gamma* is primitive and not prime", props.primitive and not props.prime, str(props))

    rad = radical(g.kernel)
    claim("radical of gamma*(0) = {0,c,a,d}", rad.mask == t.mask("0cad"), t.fmt(rad.mask))

    above = [m for m in ideal_masks(t) if m & g.kernel_mask == g.kernel_mask]
    proper = {m for m in above if m != t.full}
    claim(
        "proper hyperideals containing gamma*(0) are {0,c} and {0,c,a,d}",
        proper == _sets(t, ["0c", "0cad"]),
        ", ".join(t.fmt(m) for m in sorted(above)) + " (whole ring also contains it)",
    )
    srs = enumerate_strongly_regular(t)
    claim(
        "strongly regular relations correspond to those hyperideals",
        sorted(r.kernel_mask for r in srs) == sorted(above),
        f"{len(srs)} relations",
    )

    q_ideal = Hyperideal(t, t.mask("0cad"))
    m_ideal = Hyperideal(t, t.mask("0bdf"))
    p = ideal_properties(q_ideal)
    claim("{0,c,a,d} is a maximal hyperideal", p.maximal, str(p))
    space = SpectrumSpace.of(t)
    v = vanishing_set(space, g.kernel_mask)
    claim(
        "V(gamma*(0)) = {{0,c,a,d}}",
        [space.points[k] for k in range(space.size) if v >> k & 1] == [q_ideal.mask],
        "",
    )

    primes = {i.mask for i in spec(t)}
    maxes = {i.mask for i in mspec(t)}
    claim(
        "Spec = {{0,b,d,f}, {0,c,a,d}} = mSpec",
        primes == maxes == {q_ideal.mask, m_ideal.mask},
        "Spec: " + ", ".join(t.fmt(m) for m in sorted(primes)),
    )

    rq = quotient_ring(g)
    claim("R/gamma* is isomorphic to Z4", is_isomorphic(rq.ring, zmod(4)), f"{rq.ring.n} classes")
    q2, _ = quotient(t, q_ideal)
    claim("R/{0,c,a,d} is isomorphic to Z2", is_isomorphic(q2, zmod(2)), f"labels {q2.labels}")

    d = ideal_properties(Hyperideal(t, t.mask("0d")))
    claim("{0,d} is neither prime nor normal", not d.prime and not d.normal, str(d))
    mp = ideal_properties(m_ideal)
    claim("{0,b,d,f} is maximal and not normal", mp.maximal and not mp.normal, str(mp))
    return out


def format_claims(claims: list[Claim]) -> str:
    lines = []
    for c in claims:
        tag = "PASS" if c.passed else "FAIL"
        lines.append(f"[{tag}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    passed = sum(c.passed for c in claims)
    lines.append(f"{passed}/{len(claims)} claims reproduced")
    return "\n".join(lines) + "\n"
