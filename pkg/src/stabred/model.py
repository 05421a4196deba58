"""Dual-graph model of a central fiber and its numerical invariants.

A fiber ``S0 = sum n_i E_i`` is stored as a multigraph: one vertex per
irreducible component (geometric genus, multiplicity) and one edge per node.
Everything here is exact integer arithmetic; self-intersections come from the
fiber relation ``S0 . E = 0``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import (
    GenusTooSmall,
    InternalInconsistency,
    InvalidConfiguration,
    NonIntegralSelfIntersection,
    WrongKind,
)


class Kind(str, Enum):
    NORMAL_CROSSINGS = "nc"
    REDUCED = "reduced"
    STABLE = "stable"


_NATURAL_SPLIT = re.compile(r"(\d+)")


def id_order(cid: str):
    """Sort key for component ids: digit runs compare numerically (C2 < C10)."""
    parts = _NATURAL_SPLIT.split(cid)
    return tuple((0, int(p), p) if p.isdigit() else (1, 0, p) for p in parts if p)


@dataclass(frozen=True)
class Component:
    id: str
    genus: int
    multiplicity: int = 1


@dataclass(frozen=True)
class Node:
    """A node between two components; ``left == right`` is a self-node."""

    left: str
    right: str

    @property
    def is_loop(self) -> bool:
        return self.left == self.right

    @property
    def key(self) -> tuple[str, str]:
        return (self.left, self.right) if self.left <= self.right else (self.right, self.left)

    def other(self, cid: str) -> str:
        return self.right if cid == self.left else self.left


@dataclass(frozen=True)
class FiberConfiguration:
    components: tuple[Component, ...]
    nodes: tuple[Node, ...] = ()
    kind: Kind = Kind.REDUCED
    declared_genus: int | None = None

    def __post_init__(self):
        # accept lists for convenience; stored values stay immutable
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(
            self, "nodes", tuple(n if isinstance(n, Node) else Node(*n) for n in self.nodes)
        )
        object.__setattr__(self, "kind", Kind(self.kind))

    @cached_property
    def by_id(self) -> dict[str, Component]:
        return {c.id: c for c in self.components}

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.components]

    def component(self, cid: str) -> Component:
        return self.by_id[cid]

    @cached_property
    def _adjacency(self) -> dict[str, Counter]:
        adj: dict[str, Counter] = {c.id: Counter() for c in self.components}
        for n in self.nodes:
            if n.left in adj and n.right in adj:
                adj[n.left][n.right] += 1
                if not n.is_loop:
                    adj[n.right][n.left] += 1
        return adj

    def neighbors(self, cid: str) -> Counter:
        """Multiplicity of edges from ``cid`` to each other component (loops excluded)."""
        return Counter({k: v for k, v in self._adjacency[cid].items() if k != cid})

    def loops(self, cid: str) -> int:
        return self._adjacency[cid][cid]

    def valence(self, cid: str) -> int:
        """Number of branches through ``cid`` at nodes; loops count twice."""
        return sum(self.neighbors(cid).values()) + 2 * self.loops(cid)

    def is_connected(self) -> bool:
        if not self.components:
            return False
        seen = {self.components[0].id}
        stack = [self.components[0].id]
        while stack:
            for nb in self.neighbors(stack.pop()):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.components)

    @property
    def multiplicities_all_one(self) -> bool:
        return all(c.multiplicity == 1 for c in self.components)

    def graph_key(self):
        """Label-preserving structural identity, ignoring ordering and kind."""
        return (
            tuple(sorted((c.id, c.genus, c.multiplicity) for c in self.components)),
            tuple(sorted(n.key for n in self.nodes)),
        )

    def with_kind(self, kind: Kind) -> FiberConfiguration:
        return replace(self, kind=Kind(kind))

    def relabel(self, mapping: dict[str, str], order: Iterable[int] | None = None) -> FiberConfiguration:
        comps = [replace(c, id=mapping[c.id]) for c in self.components]
        if order is not None:
            comps = [comps[i] for i in order]
        nodes = [Node(mapping[n.left], mapping[n.right]) for n in self.nodes]
        return replace(self, components=tuple(comps), nodes=tuple(nodes))


@dataclass(frozen=True)
class Issue:
    code: str
    message: str
    component: str | None = None

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.issues

    def codes(self) -> list[str]:
        return [i.code for i in self.issues]

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class ComponentInvariants:
    self_intersection: int
    canonical_pairing: int
    dualizing_degree: int
    valence: int


def _self_intersection_numerator(config: FiberConfiguration, cid: str) -> int:
    """``n_E * E^2``, i.e. minus the multiplicity-weighted count of other branches."""
    by_id = config.by_id
    return -sum(by_id[o].multiplicity * k for o, k in config.neighbors(cid).items())


def _twice_genus_minus_two(config: FiberConfiguration) -> int | None:
    """``sum n_i K.E_i`` or None if some self-intersection is non-integral."""
    total = 0
    for c in config.components:
        num = _self_intersection_numerator(config, c.id)
        if num % c.multiplicity:
            return None
        e2 = num // c.multiplicity
        # adjunction with the arithmetic genus of E (a self-node adds one)
        total += c.multiplicity * (2 * (c.genus + config.loops(c.id)) - 2 - e2)
    return total


def betti_genus(config: FiberConfiguration) -> int:
    """Sum of vertex genera plus the first Betti number of the multigraph."""
    b1 = len(config.nodes) - len(config.components) + 1
    return sum(c.genus for c in config.components) + b1


def validate_configuration(config: FiberConfiguration) -> ValidationReport:
    issues: list[Issue] = []
    if not config.components:
        return ValidationReport((Issue("Empty", "fiber has no components"),))

    counts = Counter(config.ids)
    for cid, k in counts.items():
        if k > 1:
            issues.append(Issue("DuplicateId", f"component id {cid!r} used {k} times", cid))
    for c in config.components:
        if c.genus < 0:
            issues.append(Issue("BadValue", f"{c.id}: genus {c.genus} < 0", c.id))
        if c.multiplicity < 1:
            issues.append(Issue("BadValue", f"{c.id}: multiplicity {c.multiplicity} < 1", c.id))
    for i, n in enumerate(config.nodes):
        for end in (n.left, n.right):
            if end not in config.by_id:
                issues.append(Issue("UnknownComponent", f"node {i} references unknown component {end!r}", end))
    if issues:
        return ValidationReport(tuple(issues))

    if not config.is_connected():
        isolated = [c.id for c in config.components if not config.neighbors(c.id)]
        msg = "incidence graph is disconnected"
        if isolated and len(config.components) > 1:
            msg += f" (isolated: {', '.join(isolated)})"
        issues.append(Issue("Disconnected", msg))

    if config.kind is Kind.NORMAL_CROSSINGS:
        for c in config.components:
            if config.loops(c.id):
                issues.append(Issue("LoopInNormalCrossings", f"{c.id} carries a self-node", c.id))
    else:
        for c in config.components:
            if c.multiplicity != 1:
                issues.append(
                    Issue("NonReducedMultiplicity", f"{c.id} has multiplicity {c.multiplicity} in a {config.kind.value} fiber", c.id)
                )

    for c in config.components:
        num = _self_intersection_numerator(config, c.id)
        if num % c.multiplicity:
            issues.append(
                Issue(
                    "NonIntegralSelfIntersection",
                    f"{c.id}: multiplicity {c.multiplicity} does not divide {-num}",
                    c.id,
                )
            )

    if len(config.components) == 1 and config.components[0].multiplicity > 1:
        c = config.components[0]
        issues.append(Issue("MultipleFiber", f"single component {c.id} with multiplicity {c.multiplicity}", c.id))

    if not any(i.code == "NonIntegralSelfIntersection" for i in issues):
        twice = _twice_genus_minus_two(config)
        # F^2 = 0 and F^2 + K.F even
        assert twice % 2 == 0
        pa = 1 + twice // 2
        if pa < 0:
            issues.append(Issue("NegativeGenus", f"arithmetic genus {pa} < 0"))
        elif config.declared_genus is not None and config.declared_genus != pa:
            issues.append(Issue("GenusMismatch", f"declared genus {config.declared_genus} but computed {pa}"))
    return ValidationReport(tuple(issues))


def require_valid(config: FiberConfiguration) -> None:
    report = validate_configuration(config)
    if not report.valid:
        raise InvalidConfiguration(report)


def component_invariants(config: FiberConfiguration) -> dict[str, ComponentInvariants]:
    out = {}
    for c in config.components:
        num = _self_intersection_numerator(config, c.id)
        if num % c.multiplicity:
            raise NonIntegralSelfIntersection(
                f"{c.id}: multiplicity {c.multiplicity} does not divide {-num}"
            )
        e2 = num // c.multiplicity
        loops = config.loops(c.id)
        val = config.valence(c.id)
        out[c.id] = ComponentInvariants(
            self_intersection=e2,
            canonical_pairing=2 * (c.genus + loops) - 2 - e2,
            dualizing_degree=2 * c.genus - 2 + val,
            valence=val,
        )
    return out


def arithmetic_genus(config: FiberConfiguration) -> int:
    """Arithmetic genus ``1 + K.F / 2`` of the fiber.

    When every multiplicity is one the Betti-number formula is evaluated as
    well and the two must agree.
    """
    require_valid(config)
    pa = 1 + _twice_genus_minus_two(config) // 2
    if config.multiplicities_all_one:
        other = betti_genus(config)
        if other != pa:
            raise InternalInconsistency(f"adjunction gives p_a={pa} but Betti formula gives {other}")
    return pa


@dataclass(frozen=True)
class StabilityReport:
    component_ok: dict[str, bool] = field(hash=False)
    arithmetic_genus: int
    stable: bool

    @property
    def offenders(self) -> list[str]:
        return sorted((k for k, ok in self.component_ok.items() if not ok), key=id_order)


def stability_report(config: FiberConfiguration) -> StabilityReport:
    """Per-component ampleness of the dualizing sheaf (degree > 0) and overall stability."""
    if config.kind is Kind.NORMAL_CROSSINGS and not config.multiplicities_all_one:
        raise WrongKind("stability is only defined for reduced fibers")
    pa = arithmetic_genus(config)
    inv = component_invariants(config)
    ok = {cid: v.dualizing_degree > 0 for cid, v in inv.items()}
    return StabilityReport(ok, pa, pa >= 2 and all(ok.values()))


def require_genus_at_least_two(config: FiberConfiguration) -> int:
    pa = arithmetic_genus(config)
    if pa < 2:
        raise GenusTooSmall(f"arithmetic genus {pa} < 2")
    return pa
