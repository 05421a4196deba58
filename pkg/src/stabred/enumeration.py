"""Isomorphism classes of stable dual graphs of a given genus.

Contracting any edge of a stable graph gives a stable graph with one edge
less, so all of them are reached from the single smooth vertex of genus g by
repeatedly undoing contractions: trading one unit of a vertex's genus for a
self-node, or splitting a vertex in two joined by a new node.
"""

from __future__ import annotations

from itertools import product

from .canonical import canonical_form, from_canonical
from .errors import BoundExceeded, GenusTooSmall
from .model import Component, FiberConfiguration, Kind, Node

MAX_GENUS = 5
MAX_VERTICES = 8


def _undo_loop_contractions(config: FiberConfiguration):
    for c in config.components:
        if c.genus == 0:
            continue
        comps = tuple(Component(x.id, x.genus - 1 if x.id == c.id else x.genus) for x in config.components)
        yield FiberConfiguration(comps, config.nodes + (Node(c.id, c.id),), Kind.STABLE)


def _undo_edge_contractions(config: FiberConfiguration):
    for c in config.components:
        new = f"{c.id}'"
        rest = [n for n in config.nodes if c.id not in (n.left, n.right)]
        others = [x for x in config.components if x.id != c.id]
        nbrs = sorted(config.neighbors(c.id).items())
        loops = config.loops(c.id)
        for g1 in range(c.genus + 1):
            g2 = c.genus - g1
            for share in product(*(range(k + 1) for _, k in nbrs)):
                for l1 in range(loops + 1):
                    for l2 in range(loops - l1 + 1):
                        l12 = loops - l1 - l2
                        val1 = sum(share) + 2 * l1 + 1 + l12
                        val2 = sum(k for _, k in nbrs) - sum(share) + 2 * l2 + 1 + l12
                        if 2 * g1 - 2 + val1 <= 0 or 2 * g2 - 2 + val2 <= 0:
                            continue
                        nodes = list(rest)
                        for (o, k), s in zip(nbrs, share):
                            nodes += [Node(c.id, o)] * s + [Node(new, o)] * (k - s)
                        nodes += [Node(c.id, c.id)] * l1 + [Node(new, new)] * l2
                        nodes += [Node(c.id, new)] * (1 + l12)
                        comps = tuple(others) + (Component(c.id, g1), Component(new, g2))
                        yield FiberConfiguration(comps, tuple(nodes), Kind.STABLE)


def _relabel_plain(config: FiberConfiguration) -> FiberConfiguration:
    mapping = {c.id: f"v{i}" for i, c in enumerate(config.components)}
    return config.relabel(mapping)


def enumerate_stable_graphs(g: int, max_vertices: int) -> list[bytes]:
    """Sorted canonical forms of all stable graphs of genus ``g`` with at most ``max_vertices`` vertices."""
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")
    if g > MAX_GENUS or max_vertices > MAX_VERTICES:
        raise BoundExceeded(f"enumeration is bounded to genus <= {MAX_GENUS} and <= {MAX_VERTICES} vertices")
    if max_vertices < 1:
        raise ValueError("max_vertices must be positive")
    start = FiberConfiguration((Component("v0", g),), (), Kind.STABLE)
    level = {canonical_form(start): start}
    found = dict(level)
    while level:
        nxt = {}
        for config in level.values():
            for child in (*_undo_loop_contractions(config), *_undo_edge_contractions(config)):
                if len(child.components) > max_vertices:
                    continue
                key = canonical_form(child)
                if key not in found and key not in nxt:
                    nxt[key] = _relabel_plain(child)
        found.update(nxt)
        level = nxt
    return sorted(found)


def stable_graphs(g: int, max_vertices: int) -> list[FiberConfiguration]:
    return [from_canonical(form) for form in enumerate_stable_graphs(g, max_vertices)]

