"""Move records for auditing and replaying a reduction.

Text form, one record per line, prefixed by a 1-based step number::

    1 SPLIT C0 -> C0/g=2/deg=2
    2 CHAIN 0 0 C0 C1 -> C0-C1.e0.chain1.1 C0-C1.e0.chain1.2
    3 CONTRACT1 C1 -> C0
    4 CONTRACT2 C2 -> C0 C3
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .errors import ParseError
from .model import Component, FiberConfiguration, Kind, Node


@dataclass(frozen=True)
class BaseChangeSplit:
    """Component ``component`` is replaced by cover pieces ``(id, genus, degree)``."""

    component: str
    pieces: tuple[tuple[str, int, int], ...]

    def line(self) -> str:
        return f"SPLIT {self.component} -> " + " ".join(f"{p}/g={g}/deg={d}" for p, g, d in self.pieces)


@dataclass(frozen=True)
class ChainInsert:
    """Branch ``branch`` over input node ``edge`` becomes ``left - chain... - right``."""

    edge: int
    branch: int
    left: str
    right: str
    chain: tuple[str, ...] = ()

    def line(self) -> str:
        return " ".join(["CHAIN", str(self.edge), str(self.branch), self.left, self.right, "->", *self.chain])


@dataclass(frozen=True)
class ContractValence1:
    component: str
    neighbor: str

    def line(self) -> str:
        return f"CONTRACT1 {self.component} -> {self.neighbor}"


@dataclass(frozen=True)
class ContractValence2:
    component: str
    left: str
    right: str

    def line(self) -> str:
        return f"CONTRACT2 {self.component} -> {self.left} {self.right}"


Move = Union[BaseChangeSplit, ChainInsert, ContractValence1, ContractValence2]


@dataclass(frozen=True)
class MoveTrace:
    moves: tuple[Move, ...] = ()

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __add__(self, other: MoveTrace) -> MoveTrace:
        return MoveTrace(self.moves + other.moves)

    def dumps(self) -> str:
        return "".join(f"{i} {m.line()}\n" for i, m in enumerate(self.moves, 1))

    @classmethod
    def loads(cls, text: str) -> MoveTrace:
        moves = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            try:
                step = int(tok[0])
            except ValueError:
                raise ParseError(lineno, f"expected step number, got {tok[0]!r}") from None
            if step != len(moves) + 1:
                raise ParseError(lineno, f"step {step} out of sequence")
            moves.append(_parse_move(lineno, tok[1:]))
        return cls(tuple(moves))


def _parse_move(lineno: int, tok: list[str]) -> Move:
    try:
        op = tok[0]
        if op == "CONTRACT1" and len(tok) == 4 and tok[2] == "->":
            return ContractValence1(tok[1], tok[3])
        if op == "CONTRACT2" and len(tok) == 5 and tok[2] == "->":
            return ContractValence2(tok[1], tok[3], tok[4])
        if op == "CHAIN" and len(tok) >= 6 and tok[5] == "->":
            return ChainInsert(int(tok[1]), int(tok[2]), tok[3], tok[4], tuple(tok[6:]))
        if op == "SPLIT" and len(tok) >= 4 and tok[2] == "->":
            pieces = []
            for item in tok[3:]:
                pid, g, d = item.split("/")
                if not (g.startswith("g=") and d.startswith("deg=")):
                    raise ValueError(item)
                pieces.append((pid, int(g[2:]), int(d[4:])))
            return BaseChangeSplit(tok[1], tuple(pieces))
    except (IndexError, ValueError):
        pass
    raise ParseError(lineno, "malformed trace record: " + " ".join(tok))


def replay(config: FiberConfiguration, trace: MoveTrace) -> FiberConfiguration:
    """Apply ``trace`` to ``config``.

    Base-change records are interpreted against the input's node list: an
    input node with CHAIN records is replaced by those branches, any other
    input node is kept. Contraction records then act one at a time.
    """
    moves = list(trace)
    bc = [m for m in moves if isinstance(m, (BaseChangeSplit, ChainInsert))]
    contractions = [m for m in moves if not isinstance(m, (BaseChangeSplit, ChainInsert))]
    out = config
    if bc:
        out = _replay_base_change(config, bc)
    for m in contractions:
        out = _replay_contraction(out, m)
    return out


def _replay_base_change(config: FiberConfiguration, records) -> FiberConfiguration:
    splits = {m.component: m for m in records if isinstance(m, BaseChangeSplit)}
    chains: dict[int, list[ChainInsert]] = {}
    for m in records:
        if isinstance(m, ChainInsert):
            chains.setdefault(m.edge, []).append(m)

    comps: list[Component] = []
    for c in config.components:
        if c.id in splits:
            comps.extend(Component(p, g, 1) for p, g, _ in splits[c.id].pieces)
        else:
            comps.append(replace(c, multiplicity=1))
    nodes: list[Node] = []
    for i, n in enumerate(config.nodes):
        if i not in chains:
            if n.left in splits or n.right in splits:
                raise ValueError(f"node {i} touches a split component but has no CHAIN record")
            nodes.append(n)
            continue
        for rec in sorted(chains[i], key=lambda r: r.branch):
            path = [rec.left, *rec.chain, rec.right]
            comps.extend(Component(cid, 0, 1) for cid in rec.chain)
            nodes.extend(Node(x, y) for x, y in zip(path, path[1:]))
    return FiberConfiguration(tuple(comps), tuple(nodes), Kind.REDUCED, config.declared_genus)


def remove_component(config: FiberConfiguration, cid: str, new_nodes=()) -> FiberConfiguration:
    comps = tuple(c for c in config.components if c.id != cid)
    nodes = tuple(n for n in config.nodes if cid not in (n.left, n.right)) + tuple(new_nodes)
    return replace(config, components=comps, nodes=nodes)


def _replay_contraction(config: FiberConfiguration, m) -> FiberConfiguration:
    if isinstance(m, ContractValence1):
        return remove_component(config, m.component)
    return remove_component(config, m.component, [Node(m.left, m.right)])
