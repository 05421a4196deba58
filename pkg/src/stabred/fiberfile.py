"""Line-oriented text formats for fibers and descent data.

Fiber file (UTF-8, ``#`` starts a comment)::

    fiber kind=nc genus=2
    component C0 genus=0 mult=2
    component T1 genus=0 mult=1
    node C0 T1

Descent file::

    descent N=2
    cover C0 piece degree=2
    match 0 0 0 0          # node index, branch index, left piece, right piece

Components without ``cover`` lines get a single piece of full degree; nodes
without ``match`` lines are matched in index order.
"""

from __future__ import annotations

import re

from .basechange import DescentData
from .errors import ParseError
from .model import Component, FiberConfiguration, Kind, Node

ID_RE = re.compile(r"[A-Za-z0-9_.-]+\Z")
UINT_RE = re.compile(r"[0-9]+\Z")

_KINDS = {"nc": Kind.NORMAL_CROSSINGS, "reduced": Kind.REDUCED, "stable": Kind.STABLE}


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _uint(lineno: int, token: str, key: str) -> int:
    prefix = key + "="
    if not token.startswith(prefix):
        raise ParseError(lineno, f"expected {prefix}<uint>, got {token!r}")
    value = token[len(prefix):]
    if not UINT_RE.match(value):
        raise ParseError(lineno, f"malformed integer {value!r} for {key}")
    return int(value)


def _ident(lineno: int, token: str) -> str:
    if not ID_RE.match(token):
        raise ParseError(lineno, f"malformed component id {token!r}")
    return token


def parse_fiber(text: str) -> FiberConfiguration:
    kind = None
    declared = None
    comps: list[Component] = []
    where: dict[str, int] = {}
    nodes: list[tuple[int, Node]] = []
    for lineno, tok in _lines(text):
        head = tok[0]
        if kind is None:
            if head != "fiber":
                raise ParseError(lineno, "first line must be a 'fiber kind=...' header")
            if len(tok) not in (2, 3) or not tok[1].startswith("kind="):
                raise ParseError(lineno, "expected 'fiber kind=<nc|reduced|stable> [genus=<int>]'")
            name = tok[1][len("kind="):]
            if name not in _KINDS:
                raise ParseError(lineno, f"unknown fiber kind {name!r}")
            kind = _KINDS[name]
            if len(tok) == 3:
                declared = _uint(lineno, tok[2], "genus")
        elif head == "fiber":
            raise ParseError(lineno, "duplicate fiber header")
        elif head == "component":
            if len(tok) != 4:
                raise ParseError(lineno, "expected 'component <id> genus=<uint> mult=<uint>'")
            cid = _ident(lineno, tok[1])
            if cid in where:
                raise ParseError(lineno, f"duplicate component id {cid!r} (first declared on line {where[cid]})")
            genus = _uint(lineno, tok[2], "genus")
            mult = _uint(lineno, tok[3], "mult")
            if mult < 1:
                raise ParseError(lineno, "mult must be at least 1")
            where[cid] = lineno
            comps.append(Component(cid, genus, mult))
        elif head == "node":
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'node <id> <id>'")
            nodes.append((lineno, Node(_ident(lineno, tok[1]), _ident(lineno, tok[2]))))
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if kind is None:
        raise ParseError(1, "missing 'fiber' header")
    for lineno, n in nodes:
        for end in (n.left, n.right):
            if end not in where:
                raise ParseError(lineno, f"node references undeclared component {end!r}")
    return FiberConfiguration(tuple(comps), tuple(n for _, n in nodes), kind, declared)


def dumps_fiber(config: FiberConfiguration) -> str:
    head = f"fiber kind={config.kind.value}"
    if config.declared_genus is not None:
        head += f" genus={config.declared_genus}"
    lines = [head]
    lines += [f"component {c.id} genus={c.genus} mult={c.multiplicity}" for c in config.components]
    lines += [f"node {n.left} {n.right}" for n in config.nodes]
    return "\n".join(lines) + "\n"


def parse_descent(text: str) -> DescentData:
    N = None
    pieces: dict[str, list[int]] = {}
    matches: dict[int, dict[int, tuple[int, int]]] = {}
    match_line: dict[int, int] = {}
    for lineno, tok in _lines(text):
        head = tok[0]
        if N is None:
            if head != "descent" or len(tok) != 2:
                raise ParseError(lineno, "first line must be 'descent N=<uint>'")
            N = _uint(lineno, tok[1], "N")
            if N < 1:
                raise ParseError(lineno, "N must be at least 1")
        elif head == "cover":
            if len(tok) != 4 or tok[2] != "piece":
                raise ParseError(lineno, "expected 'cover <component-id> piece degree=<uint>'")
            degree = _uint(lineno, tok[3], "degree")
            pieces.setdefault(_ident(lineno, tok[1]), []).append(degree)
        elif head == "match":
            if len(tok) != 5:
                raise ParseError(lineno, "expected 'match <edge> <branch> <left-piece> <right-piece>'")
            for t in tok[1:]:
                if not UINT_RE.match(t):
                    raise ParseError(lineno, f"malformed integer {t!r}")
            edge, branch, lp, rp = (int(t) for t in tok[1:])
            per = matches.setdefault(edge, {})
            if branch in per:
                raise ParseError(lineno, f"branch {branch} of node {edge} matched twice")
            per[branch] = (lp, rp)
            match_line.setdefault(edge, lineno)
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if N is None:
        raise ParseError(1, "missing 'descent' header")
    matching = {}
    for edge, per in matches.items():
        if sorted(per) != list(range(len(per))):
            raise ParseError(match_line[edge], f"branches of node {edge} must be numbered 0..{len(per) - 1}")
        matching[edge] = tuple(per[b] for b in range(len(per)))
    return DescentData(N, {k: tuple(v) for k, v in pieces.items()}, matching)


def dumps_descent(descent: DescentData) -> str:
    lines = [f"descent N={descent.N}"]
    for cid, degrees in descent.pieces.items():
        lines += [f"cover {cid} piece degree={d}" for d in degrees]
    for edge in sorted(descent.matching):
        lines += [f"match {edge} {b} {p} {q}" for b, (p, q) in enumerate(descent.matching[edge])]
    return "\n".join(lines) + "\n"
