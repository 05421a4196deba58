"""Graphviz rendering of a fiber's dual graph."""

from __future__ import annotations

from .model import FiberConfiguration, component_invariants, id_order, require_valid


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(config: FiberConfiguration, name: str = "fiber") -> str:
    require_valid(config)
    inv = component_invariants(config)
    comps = sorted(config.components, key=lambda c: id_order(c.id))
    lines = [f"graph {_quote(name)} {{"]
    for c in comps:
        label = f"{c.id}\\ng={c.genus} n={c.multiplicity} E2={inv[c.id].self_intersection}"
        lines.append(f'  {_quote(c.id)} [label="{label}"];')
    for left, right in sorted((tuple(sorted((n.left, n.right), key=id_order)) for n in config.nodes),
                              key=lambda p: (id_order(p[0]), id_order(p[1]))):
        lines.append(f"  {_quote(left)} -- {_quote(right)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
