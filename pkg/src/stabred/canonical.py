"""Canonical form of a labeled dual graph.

The certificate of a vertex ordering ``v_0, ..., v_{k-1}`` is the sequence of
blocks ``(genus, mult, valence, -a(v_0, v_j), ..., -a(v_{j-1}, v_j), -loops(v_j))``
for ``j = 0..k-1``, where ``a`` counts nodes. The canonical form encodes the
lexicographically smallest certificate over *all* orderings. Since each block
leads with ``(genus, mult, valence)``, the minimum only visits orderings that
sort vertices by that triple; adjacency entries are negated so the search
prefers vertices attached to those already placed, which keeps the branching
of a depth-first branch-and-bound small. Interchangeable twins are explored
once.

Encoding: ``g/n,g/n,...|i-j:k,...`` with ``i <= j`` positions in canonical
order and ``k`` the number of nodes between them (``i == j`` for self-nodes).
"""

from __future__ import annotations

from .errors import TooLarge
from .model import Component, FiberConfiguration, Kind, Node

MAX_COMPONENTS = 12


def _matrix(config: FiberConfiguration):
    idx = {c.id: i for i, c in enumerate(config.components)}
    k = len(idx)
    a = [[0] * k for _ in range(k)]
    for n in config.nodes:
        i, j = idx[n.left], idx[n.right]
        a[i][j] += 1
        if i != j:
            a[j][i] += 1
    return a


def _twin_classes(labels, a) -> list[int]:
    k = len(labels)
    rep = list(range(k))
    for v in range(k):
        if rep[v] != v:
            continue
        for w in range(v + 1, k):
            if rep[w] != w or labels[w] != labels[v] or a[v][v] != a[w][w]:
                continue
            if all(a[v][x] == a[w][x] for x in range(k) if x != v and x != w):
                rep[w] = v
    return rep


def canonical_order(config: FiberConfiguration) -> list[int]:
    """Indices of ``config.components`` in canonical order."""
    comps = config.components
    k = len(comps)
    if k == 0:
        return []
    a = _matrix(config)
    labels = [(c.genus, c.multiplicity, sum(a[i]) + a[i][i]) for i, c in enumerate(comps)]
    twin = _twin_classes(labels, a)

    best: list | None = None
    best_order: list[int] = []
    order: list[int] = []
    prefix: list = []
    placed = [False] * k

    def search():
        nonlocal best, best_order
        j = len(order)
        if best is not None:
            head = best[:j]
            if prefix > head:
                return
            bound = best[j] if prefix == head and j < k else None
        else:
            bound = None
        if j == k:
            if best is None or prefix < best:
                best = list(prefix)
                best_order = list(order)
            return
        cands = {}
        seen_twins = set()
        for v in range(k):
            if placed[v] or twin[v] in seen_twins:
                continue
            seen_twins.add(twin[v])
            cands[v] = (*labels[v], *(-a[u][v] for u in order), -a[v][v])
        low = min(cands.values())
        if bound is not None and low > bound:
            return
        for v, b in cands.items():
            if b != low:
                continue
            placed[v] = True
            order.append(v)
            prefix.append(b)
            search()
            prefix.pop()
            order.pop()
            placed[v] = False

    search()
    return best_order


def _encode(comps, a, order) -> bytes:
    verts = ",".join(f"{comps[v].genus}/{comps[v].multiplicity}" for v in order)
    edges = []
    for j in range(len(order)):
        for i in range(j + 1):
            m = a[order[i]][order[j]]
            if m:
                edges.append(f"{i}-{j}:{m}")
    return f"{verts}|{','.join(edges)}".encode()


def canonical_form(config: FiberConfiguration, max_components: int | None = MAX_COMPONENTS) -> bytes:
    """Relabeling-invariant byte string; equal iff the labeled multigraphs are isomorphic."""
    if max_components is not None and len(config.components) > max_components:
        raise TooLarge(f"canonical_form is bounded to {max_components} components, got {len(config.components)}")
    order = canonical_order(config)
    return _encode(config.components, _matrix(config), order)


def from_canonical(form: bytes, kind: Kind = Kind.STABLE, prefix: str = "v") -> FiberConfiguration:
    """Decode a canonical form back into a configuration with ids ``v0, v1, ...``."""
    text = form.decode()
    verts, _, edges = text.partition("|")
    comps = []
    for i, item in enumerate(verts.split(",")):
        g, n = item.split("/")
        comps.append(Component(f"{prefix}{i}", int(g), int(n)))
    nodes = []
    if edges:
        for item in edges.split(","):
            pair, m = item.split(":")
            i, j = (int(x) for x in pair.split("-"))
            nodes.extend([Node(comps[i].id, comps[j].id)] * int(m))
    return FiberConfiguration(tuple(comps), tuple(nodes), kind)
