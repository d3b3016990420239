"""Analysis reports and DOT export.

Everything here is ordered canonically so repeated runs on the same
document are byte-identical.
"""

from __future__ import annotations

import json

from .core import HyperringTable, bits, classify, validate_axioms
from .ideals import enumerate_hyperideals, ideal_properties, is_local, mspec, nilradical, spec
from .relations import (
    enumerate_strongly_regular,
    gamma_star,
    relation_properties,
    relation_spectrum,
)
from .spectrum import SpectrumSpace, specialization_covers, topology_report


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(space: SpectrumSpace) -> str:
    """Hasse diagram of the specialization order (edges ``P -> Q`` for covers)."""
    t = space.table
    name = (t.name if t is not None and t.name else "Spec")
    lines = [f"digraph {_dot_id('Spec(' + name + ')')} {{", "  rankdir=BT;"]
    for k, p in enumerate(space.points):
        label = t.fmt(p) if t is not None else "{" + ",".join(map(str, bits(p))) + "}"
        lines.append(f"  p{k} [label={_dot_id(label)}];")
    for i, j in specialization_covers(space):
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def analysis(table: HyperringTable) -> dict:
    """Everything the ``report`` command prints, as plain JSON-ready data."""
    val = validate_axioms(table)
    out: dict = {
        "name": table.name,
        "size": table.n,
        "validation": {
            "valid": val.valid,
            "trivial": val.trivial,
            "violations": [[v.axiom, list(v.witness)] for v in val.violations],
        },
    }
    if not val.valid:
        return out
    fmt = table.names
    cl = classify(table)
    out["classification"] = {
        "ring": cl.ring,
        "hyperfield": cl.hyperfield,
        "hyperdomain": cl.hyperdomain,
        "idempotents": fmt(cl.idempotents),
        "has_nontrivial_idempotent": cl.has_nontrivial_idempotent,
        "local": is_local(table),
    }
    ideals = enumerate_hyperideals(table)
    out["ideals"] = {
        "count": len(ideals),
        "list": [
            {"members": i.labels, **vars(ideal_properties(i))} for i in ideals
        ],
        "nilradical": nilradical(table).labels,
    }
    space = SpectrumSpace.of(table)
    topo = topology_report(space)
    pts = lambda m: [fmt(space.points[k]) for k in bits(m)]  # noqa: E731
    out["spectrum"] = {
        "spec": [p.labels for p in spec(table)],
        "mspec": [p.labels for p in mspec(table)],
        "closed_sets": sorted(pts(c) for c in space.closed_sets),
    }
    out["topology"] = {
        "irreducible": topo.irreducible,
        "connected": topo.connected,
        "components": [pts(c) for c in topo.components],
        "t0": topo.separation.t0,
        "t1": topo.separation.t1,
        "t2": topo.separation.t2,
        "dimension": topo.dimension,
        "discrete": topo.discrete,
        "disagreements": topo.disagreements(),
    }
    g = gamma_star(table)
    out["gamma_star"] = {
        "partition": [fmt(b) for b in g.blocks],
        "kernel": fmt(g.kernel_mask),
    }
    rels = enumerate_strongly_regular(table)
    out["strongly_regular"] = {
        "count": len(rels),
        "list": [
            {"partition": [fmt(b) for b in r.blocks], "kernel": fmt(r.kernel_mask), **vars(relation_properties(r))}
            for r in rels
        ],
    }
    rs = relation_spectrum(table)
    out["relation_spectrum"] = {
        "points": [fmt(k) for k in rs.kernels],
        "join_law": rs.join_law,
        "meet_law": rs.meet_law,
        "homeomorphic_to_V_gamma0": rs.homeomorphic,
    }
    return out


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _sets(xs) -> str:
    return ", ".join("{" + ",".join(x) + "}" for x in xs) or "(none)"


def to_text(data: dict) -> str:
    lines = [f"hyperring: {data['name'] or '(unnamed)'}  size: {data['size']}"]
    val = data["validation"]
    lines.append(f"valid: {'yes' if val['valid'] else 'no'}" + ("  (trivial carrier)" if val["trivial"] else ""))
    for axiom, wit in val["violations"]:
        lines.append(f"  violation: {axiom}({', '.join(wit)})")
    if not val["valid"]:
        return "\n".join(lines) + "\n"
    cl = data["classification"]
    lines.append(
        "class: "
        + ", ".join(k for k in ("ring", "hyperfield", "hyperdomain", "local") if cl[k])
        if any(cl[k] for k in ("ring", "hyperfield", "hyperdomain", "local"))
        else "class: hyperring"
    )
    lines.append("idempotents: {" + ",".join(cl["idempotents"]) + "}")
    ideals = data["ideals"]
    lines.append(f"hyperideals ({ideals['count']}):")
    for i in ideals["list"]:
        flags = [k for k in ("prime", "maximal", "normal") if i[k]]
        if i["radical_flag"]:
            flags.append("radical")
        if not i["proper"]:
            flags.append("improper")
        lines.append("  {" + ",".join(i["members"]) + "}" + (f"  [{' '.join(flags)}]" if flags else ""))
    lines.append("nilradical: {" + ",".join(ideals["nilradical"]) + "}")
    sp = data["spectrum"]
    lines.append("Spec: " + _sets(sp["spec"]))
    lines.append("mSpec: " + _sets(sp["mspec"]))
    topo = data["topology"]
    lines.append(
        "topology: "
        + f"irreducible={topo['irreducible']} connected={topo['connected']} "
        + f"T0={topo['t0']} T1={topo['t1']} T2={topo['t2']} "
        + f"dim={topo['dimension']} discrete={topo['discrete']}"
    )
    lines.append("components: " + "; ".join(_sets(c) for c in topo["components"]))
    if topo["disagreements"]:
        lines.append("DISAGREEMENTS: " + ", ".join(topo["disagreements"]))
    g = data["gamma_star"]
    lines.append("gamma*: " + _sets(g["partition"]))
    lines.append("gamma*(0): {" + ",".join(g["kernel"]) + "}")
    sr = data["strongly_regular"]
    lines.append(f"strongly regular relations ({sr['count']}):")
    for r in sr["list"]:
        flags = [k for k in ("prime", "primitive", "maximal") if r[k]]
        lines.append(f"  kernel {{{','.join(r['kernel'])}}}: {_sets(r['partition'])}" + (f"  [{' '.join(flags)}]" if flags else ""))
    rs = data["relation_spectrum"]
    lines.append(
        "relation spectrum: "
        + _sets(rs["points"])
        + f"  homeomorphic to V(gamma*(0)): {rs['homeomorphic_to_V_gamma0']}"
    )
    return "\n".join(lines) + "\n"
