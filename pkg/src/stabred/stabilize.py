"""Contraction of unstable rational components on a reduced fiber.

In a reduced fiber a loop-free component ``E`` satisfies
``-E^2 = E . (S0 - E)``, the number of points where it meets the rest, so a
smooth rational component that breaks stability has ``E^2`` in ``{0, -1, -2}``:

* ``E^2 = 0``: ``E`` is isolated in a connected fiber, which cannot happen.
* ``E^2 = -1``: a rational tail, blown down onto its neighbor.
* ``E^2 = -2``: a link in a chain, replaced by a direct node between its two
  neighbors (a self-node if both are the same component).
"""

from __future__ import annotations

import random
from dataclasses import replace
from enum import Enum

from .errors import GenusTooSmall, InternalInconsistency, NotContractible, WrongKind, ZariskiViolation
from .model import (
    Component,
    FiberConfiguration,
    Kind,
    Node,
    arithmetic_genus,
    betti_genus,
    id_order,
    require_valid,
    stability_report,
)
from .trace import ContractValence1, ContractValence2, MoveTrace, remove_component


class ComponentClass(str, Enum):
    STABLE = "stable"
    BLOW_DOWN = "blow-down (E^2=-1)"
    CHAIN_MEMBER = "chain member (E^2=-2)"
    ZARISKI_IMPOSSIBLE = "Zariski-impossible (E^2=0)"


CONTRACTIBLE = (ComponentClass.BLOW_DOWN, ComponentClass.CHAIN_MEMBER)


def classify_components(config: FiberConfiguration) -> dict[str, ComponentClass]:
    out = {}
    for c in config.components:
        if c.genus > 0 or config.loops(c.id):
            out[c.id] = ComponentClass.STABLE
            continue
        val = config.valence(c.id)
        out[c.id] = {
            0: ComponentClass.ZARISKI_IMPOSSIBLE,
            1: ComponentClass.BLOW_DOWN,
            2: ComponentClass.CHAIN_MEMBER,
        }.get(val, ComponentClass.STABLE)
    return out


def zariski_offenders(config: FiberConfiguration) -> list[str]:
    """Components meeting nothing else in a fiber with several components."""
    if len(config.components) < 2:
        return []
    return sorted((c.id for c in config.components if not config.neighbors(c.id)), key=id_order)


def _contract(config: FiberConfiguration, cid: str, cls: ComponentClass):
    nbrs = [o for o, k in sorted(config.neighbors(cid).items(), key=lambda kv: id_order(kv[0])) for _ in range(k)]
    if cls is ComponentClass.BLOW_DOWN:
        return remove_component(config, cid), ContractValence1(cid, nbrs[0])
    left, right = nbrs
    return remove_component(config, cid, [Node(left, right)]), ContractValence2(cid, left, right)


def contract_one(config: FiberConfiguration, cid: str):
    """Contract one (-1)- or (-2)-curve; returns the new fiber and the trace record."""
    cls = classify_components(config).get(cid)
    if cls not in CONTRACTIBLE:
        raise NotContractible(f"{cid} classifies as {cls.value if cls else 'missing'}")
    before = betti_genus(config)
    out, record = _contract(config, cid, cls)
    if betti_genus(out) != before:
        raise InternalInconsistency(f"contracting {cid} changed the arithmetic genus")
    return out, record


def _prepare(config: FiberConfiguration) -> FiberConfiguration:
    if config.kind is Kind.NORMAL_CROSSINGS:
        if not config.multiplicities_all_one:
            raise WrongKind("stabilization needs a reduced fiber; apply a base change first")
        config = config.with_kind(Kind.REDUCED)
    offenders = zariski_offenders(config)
    if offenders:
        raise ZariskiViolation(
            f"component(s) {', '.join(offenders)} have E^2=0 (isolated in their fiber), impossible by Zariski's main theorem"
        )
    require_valid(config)
    pa = arithmetic_genus(config)
    if pa < 2:
        raise GenusTooSmall(f"arithmetic genus {pa} < 2 has no stable model")
    return config


def stabilize(config: FiberConfiguration, chooser=None):
    """Contract until stable.

    By default the contractible component with the smallest id is taken first;
    ``chooser(list_of_ids)`` may pick another one (used to test that the
    result does not depend on the order).
    """
    current = _prepare(config)
    pa = arithmetic_genus(current)
    moves = []
    limit = len(current.components)
    while True:
        classes = classify_components(current)
        if any(v is ComponentClass.ZARISKI_IMPOSSIBLE for v in classes.values()):
            raise ZariskiViolation("an isolated rational component appeared during contraction")
        todo = sorted((k for k, v in classes.items() if v in CONTRACTIBLE), key=id_order)
        if not todo:
            break
        cid = chooser(todo) if chooser else todo[0]
        current, record = contract_one(current, cid)
        moves.append(record)
        if len(moves) > limit:
            raise InternalInconsistency("stabilization did not terminate within the component bound")
    current = current.with_kind(Kind.STABLE)
    report = stability_report(current)
    if report.arithmetic_genus != pa:
        raise InternalInconsistency(f"arithmetic genus changed from {pa} to {report.arithmetic_genus}")
    if not report.stable:
        raise InternalInconsistency(f"result is not stable: {', '.join(report.offenders)}")
    return current, MoveTrace(tuple(moves))


def random_order_chooser(rng: random.Random):
    return lambda todo: rng.choice(todo)


# inverse moves, used to build unstable models of a given stable fiber

def attach_tail(config: FiberConfiguration, cid: str, new_id: str) -> FiberConfiguration:
    """Blow up a point of ``cid``: a new rational tail meeting it once."""
    return replace(
        config,
        components=config.components + (Component(new_id, 0, 1),),
        nodes=config.nodes + (Node(cid, new_id),),
        kind=Kind.REDUCED,
    )


def subdivide_node(config: FiberConfiguration, index: int, new_id: str) -> FiberConfiguration:
    """Blow up node ``index``: a rational bridge between its two branches."""
    n = config.nodes[index]
    nodes = config.nodes[:index] + config.nodes[index + 1 :] + (Node(n.left, new_id), Node(new_id, n.right))
    return replace(
        config,
        components=config.components + (Component(new_id, 0, 1),),
        nodes=nodes,
        kind=Kind.REDUCED,
    )


def random_unstable_model(config: FiberConfiguration, rng: random.Random, moves: int, prefix: str = "x"):
    out = config
    for k in range(moves):
        new_id = f"{prefix}{k}"
        if out.nodes and rng.random() < 0.5:
            out = subdivide_node(out, rng.randrange(len(out.nodes)), new_id)
        else:
            out = attach_tail(out, rng.choice(out.ids), new_id)
    return out.with_kind(Kind.REDUCED)
