"""Global base change ``t -> t^N`` on a normal-crossings fiber.

Over a component ``E`` of multiplicity ``n`` the normalized pullback is an
unramified degree-``n`` cover away from the nodes. At a node with a neighbor
of multiplicity ``n'`` there are ``gcd(n, n')`` branches, and the cover is
ramified to order ``r = n / gcd(n, n')`` at each of their points on ``E``.
How that degree-``n`` cover breaks into connected pieces, and how the chain
ends are glued to the pieces, is global data the local models do not
determine. It is supplied as :class:`DescentData`, either explicitly or
found by :func:`search_descent`.

The group ``mu_N`` acts on the pullback and permutes the pieces over ``E``
transitively, so all pieces over one component have the same degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, lcm

from .canonical import canonical_form
from .errors import (
    BoundExceeded,
    GenusNotConserved,
    InvalidDescent,
    NegativeGenus,
    NoConsistentDescent,
    NonIntegralGenus,
    NotDivisible,
    StableReductionError,
)
from .local import node_base_change
from .model import (
    Component,
    FiberConfiguration,
    Issue,
    Kind,
    Node,
    ValidationReport,
    arithmetic_genus,
    betti_genus,
    require_valid,
)
from .trace import BaseChangeSplit, ChainInsert, MoveTrace

MAX_COMPONENTS = 12
MAX_PARTITIONS = 64
MAX_MATCHINGS = 10_000

# report codes that mean "the numbers do not close up", as opposed to malformed input
GENUS_CODES = frozenset({"NonIntegralGenus", "NegativeGenus", "Disconnected", "GenusMismatch"})


@dataclass(frozen=True)
class DescentData:
    """Piece degrees per component and, per node, the (left piece, right piece)
    each branch attaches to. Missing entries take defaults: a single piece of
    full degree, and index-order matching."""

    N: int
    pieces: dict[str, tuple[int, ...]] = field(default_factory=dict)
    matching: dict[int, tuple[tuple[int, int], ...]] = field(default_factory=dict)

    def degrees(self, config: FiberConfiguration, cid: str) -> tuple[int, ...]:
        return tuple(self.pieces.get(cid, (config.component(cid).multiplicity,)))


@dataclass(frozen=True)
class CoverPiece:
    parent: str
    index: int
    id: str
    degree: int
    genus: int
    # (node index, side) -> number of points over that node; side 0 = left end
    points_over_edge: dict[tuple[int, int], int]


def total_multiplicity_lcm(config: FiberConfiguration) -> int:
    return reduce(lcm, (c.multiplicity for c in config.components), 1)


def trivial_descent(config: FiberConfiguration, N: int | None = None) -> DescentData:
    """One piece of full degree over every component, index-order matching."""
    return DescentData(N if N is not None else total_multiplicity_lcm(config))


def _incidences(config: FiberConfiguration, cid: str):
    """(node index, side, other multiplicity) for each branch end lying on ``cid``."""
    out = []
    for i, n in enumerate(config.nodes):
        if n.left == cid:
            out.append((i, 0, config.component(n.right).multiplicity))
        if n.right == cid:
            out.append((i, 1, config.component(n.left).multiplicity))
    return out


def ramification_index(n: int, n_other: int) -> int:
    return n // gcd(n, n_other)


def piece_degree_unit(config: FiberConfiguration, cid: str) -> int:
    n = config.component(cid).multiplicity
    return reduce(lcm, (ramification_index(n, o) for _, _, o in _incidences(config, cid)), 1)


def piece_genus(config: FiberConfiguration, cid: str, degree: int) -> int:
    """Riemann-Hurwitz genus of a connected degree-``degree`` piece over ``cid``.

    ``2g' - 2 = degree (2g - 2) + sum_e p_e (r_e - 1)`` with ``r_e`` the
    ramification index over node ``e`` and ``p_e = degree / r_e`` points.
    """
    comp = config.component(cid)
    unit = piece_degree_unit(config, cid)
    if degree < 1 or degree % unit or degree > comp.multiplicity:
        raise NotDivisible(f"{cid}: piece degree {degree} must be a multiple of {unit} and at most {comp.multiplicity}")
    twice = degree * (2 * comp.genus - 2)
    for _, _, other in _incidences(config, cid):
        r = ramification_index(comp.multiplicity, other)
        twice += (degree // r) * (r - 1)
    if twice % 2:
        raise NonIntegralGenus(f"{cid}: Riemann-Hurwitz gives 2g'-2 = {twice}")
    g = twice // 2 + 1
    if g < 0:
        raise NegativeGenus(f"{cid}: Riemann-Hurwitz gives genus {g} for degree {degree}")
    return g


def _piece_ids(cid: str, count: int) -> list[str]:
    if count == 1:
        return [cid]
    return [f"{cid}.sheet{k}" for k in range(1, count + 1)]


def _slots(config: FiberConfiguration, cid: str, degrees, edge: int, side: int) -> list[int]:
    n = config.component(cid).multiplicity
    other = config.nodes[edge].right if side == 0 else config.nodes[edge].left
    d = gcd(n, config.component(other).multiplicity)
    return [deg * d // n for deg in degrees]


def default_matching(left_slots: list[int], right_slots: list[int]) -> tuple[tuple[int, int], ...]:
    """Branch ``k`` goes to the piece whose slot range contains ``k``, on both sides."""
    lhs = [p for p, s in enumerate(left_slots) for _ in range(s)]
    rhs = [q for q, s in enumerate(right_slots) for _ in range(s)]
    return tuple(zip(lhs, rhs))


def _matching_for(config, descent, i):
    n = config.nodes[i]
    if i in descent.matching:
        return tuple(descent.matching[i])
    ls = _slots(config, n.left, descent.degrees(config, n.left), i, 0)
    rs = _slots(config, n.right, descent.degrees(config, n.right), i, 1)
    return default_matching(ls, rs)


def cover_pieces(config: FiberConfiguration, descent: DescentData) -> dict[str, list[CoverPiece]]:
    out = {}
    for c in config.components:
        degrees = descent.degrees(config, c.id)
        ids = _piece_ids(c.id, len(degrees))
        pieces = []
        for k, (pid, deg) in enumerate(zip(ids, degrees)):
            pts = {}
            for i, side, other in _incidences(config, c.id):
                pts[(i, side)] = deg * gcd(c.multiplicity, other) // c.multiplicity
            pieces.append(CoverPiece(c.id, k, pid, deg, piece_genus(config, c.id, deg), pts))
        out[c.id] = pieces
    return out


def _structural_issues(config: FiberConfiguration, descent: DescentData) -> list[Issue]:
    issues = []
    N = descent.N
    if not isinstance(N, int) or N < 1:
        return [Issue("BadN", f"N must be a positive integer, got {N!r}")]
    ell = total_multiplicity_lcm(config)
    if N % ell:
        issues.append(Issue("NDivisibility", f"lcm of multiplicities {ell} does not divide N={N}"))
    for cid in descent.pieces:
        if cid not in config.by_id:
            issues.append(Issue("UnknownComponent", f"descent names unknown component {cid!r}", cid))
    if issues:
        return issues
    for c in config.components:
        degrees = descent.degrees(config, c.id)
        unit = piece_degree_unit(config, c.id)
        if not degrees or any(d < 1 for d in degrees):
            issues.append(Issue("DegreeSum", f"{c.id}: piece degrees must be positive", c.id))
            continue
        if sum(degrees) != c.multiplicity:
            issues.append(Issue("DegreeSum", f"{c.id}: degrees {list(degrees)} do not sum to {c.multiplicity}", c.id))
        bad = [d for d in degrees if d % unit]
        if bad:
            issues.append(Issue("DegreeNotMultiple", f"{c.id}: degrees {bad} are not multiples of {unit}", c.id))
        if len(set(degrees)) > 1:
            issues.append(Issue("UnequalDegrees", f"{c.id}: pieces of one component must share a degree, got {list(degrees)}", c.id))
    for i in descent.matching:
        if not isinstance(i, int) or not 0 <= i < len(config.nodes):
            issues.append(Issue("BadMatching", f"matching names unknown node index {i!r}"))
    if issues:
        return issues
    for i, n in enumerate(config.nodes):
        d = gcd(config.component(n.left).multiplicity, config.component(n.right).multiplicity)
        m = _matching_for(config, descent, i)
        ls = _slots(config, n.left, descent.degrees(config, n.left), i, 0)
        rs = _slots(config, n.right, descent.degrees(config, n.right), i, 1)
        if len(m) != d:
            issues.append(Issue("BadMatching", f"node {i}: {len(m)} branches matched, expected {d}"))
            continue
        if any(not 0 <= p < len(ls) or not 0 <= q < len(rs) for p, q in m):
            issues.append(Issue("BadMatching", f"node {i}: piece index out of range"))
            continue
        used_l = [sum(1 for p, _ in m if p == k) for k in range(len(ls))]
        used_r = [sum(1 for _, q in m if q == k) for k in range(len(rs))]
        if used_l != ls or used_r != rs:
            issues.append(
                Issue("BadMatching", f"node {i}: slots used {used_l}/{used_r}, available {ls}/{rs}")
            )
    return issues


def validate_descent(config: FiberConfiguration, descent: DescentData) -> ValidationReport:
    require_valid(config)
    issues = _structural_issues(config, descent)
    if issues:
        return ValidationReport(tuple(issues))
    for c in config.components:
        for deg in set(descent.degrees(config, c.id)):
            try:
                piece_genus(config, c.id, deg)
            except (NonIntegralGenus, NegativeGenus) as exc:
                issues.append(Issue(type(exc).__name__, str(exc), c.id))
    if issues:
        return ValidationReport(tuple(issues))
    out = _glue(config, descent)[0]
    if not out.is_connected():
        issues.append(Issue("Disconnected", "glued fiber is disconnected"))
    else:
        before, after = arithmetic_genus(config), betti_genus(out)
        if before != after:
            issues.append(Issue("GenusMismatch", f"arithmetic genus {before} before, {after} after"))
    return ValidationReport(tuple(issues))


def _glue(config: FiberConfiguration, descent: DescentData):
    pieces = cover_pieces(config, descent)
    used = {c.id for c in config.components}
    split_ids = set()
    records = []
    comps: list[Component] = []
    for c in config.components:
        ps = pieces[c.id]
        comps.extend(Component(p.id, p.genus, 1) for p in ps)
        if len(ps) == 1 and ps[0].degree == 1:
            continue
        split_ids.add(c.id)
        records.append(BaseChangeSplit(c.id, tuple((p.id, p.genus, p.degree) for p in ps)))
        for p in ps:
            if p.id != c.id and p.id in used:
                raise StableReductionError(f"generated id {p.id!r} collides with an input component")

    nodes: list[Node] = []
    chain_comps: list[Component] = []
    for i, n in enumerate(config.nodes):
        a, b = config.component(n.left).multiplicity, config.component(n.right).multiplicity
        local = node_base_change(a, b, descent.N)
        match = _matching_for(config, descent, i)
        touched = n.left in split_ids or n.right in split_ids
        if not touched and local.chain_length == 0 and local.branch_count == 1:
            nodes.append(n)
            continue
        for branch, (p, q) in enumerate(match):
            left, right = pieces[n.left][p].id, pieces[n.right][q].id
            chain = tuple(f"{left}-{right}.e{i}.chain{branch + 1}.{j}" for j in range(1, local.chain_length + 1))
            for cid in chain:
                if cid in used:
                    raise StableReductionError(f"generated id {cid!r} collides with an input component")
            chain_comps.extend(Component(cid, 0, 1) for cid in chain)
            path = [left, *chain, right]
            nodes.extend(Node(x, y) for x, y in zip(path, path[1:]))
            records.append(ChainInsert(i, branch, left, right, chain))
    out = FiberConfiguration(tuple(comps + chain_comps), tuple(nodes), Kind.REDUCED, config.declared_genus)
    return out, MoveTrace(tuple(records))


def apply_base_change(config: FiberConfiguration, descent: DescentData):
    """Return the reduced fiber after base change and the trace of splittings and chains.

    Raises :class:`InvalidDescent` for malformed descent data and
    :class:`GenusNotConserved` when the data is well formed but cannot come
    from a family (non-integral or negative piece genus, disconnected gluing,
    or a change in arithmetic genus).
    """
    report = validate_descent(config, descent)
    if not report.valid:
        codes = set(report.codes())
        if codes - GENUS_CODES:
            raise InvalidDescent(report)
        raise GenusNotConserved("; ".join(str(i) for i in report.issues))
    out, trace = _glue(config, descent)
    before, after = arithmetic_genus(config), arithmetic_genus(out)
    if before != after:
        raise GenusNotConserved(f"arithmetic genus {before} before base change, {after} after")
    return out, trace


def _equal_partitions(n: int, unit: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` into equal parts that are multiples of ``unit``, lexicographic."""
    parts = [(d,) * (n // d) for d in range(unit, n + 1, unit) if n % d == 0]
    return sorted(parts)


def _transports(ls: list[int], rs: list[int]):
    """Non-negative integer matrices with row sums ``ls`` and column sums ``rs``,
    flattened to branch lists (row-major, lexicographic)."""
    rows, cols = len(ls), len(rs)

    def rec(r, remaining_cols, acc):
        if r == rows:
            if not any(remaining_cols):
                yield tuple(acc)
            return
        for row in _compositions(ls[r], remaining_cols):
            nxt = [c - x for c, x in zip(remaining_cols, row)]
            yield from rec(r + 1, nxt, acc + [(r, q) for q in range(cols) for _ in range(row[q])])

    yield from rec(0, list(rs), [])


def _compositions(total: int, caps: list[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    for x in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - x, caps[1:]):
            yield (x, *rest)


def search_descent(config: FiberConfiguration, N: int, max_results: int = 1) -> list[DescentData]:
    """All genus-conserving connected descents for ``N``, deduplicated by output graph.

    Candidates are visited in a fixed order: piece-degree choices
    lexicographically (components in input order), then matchings.
    """
    require_valid(config)
    if max_results < 1:
        raise ValueError("max_results must be positive")
    ell = total_multiplicity_lcm(config)
    if N % ell:
        raise NotDivisible(f"lcm of multiplicities {ell} does not divide N={N}")
    if len(config.components) > MAX_COMPONENTS:
        raise BoundExceeded(f"search_descent handles at most {MAX_COMPONENTS} components")

    options = []
    for c in config.components:
        parts = _equal_partitions(c.multiplicity, piece_degree_unit(config, c.id))
        if len(parts) > MAX_PARTITIONS:
            raise BoundExceeded(f"{c.id}: more than {MAX_PARTITIONS} piece partitions")
        options.append(parts)

    results: list[DescentData] = []
    seen: set[bytes] = set()
    ids = config.ids
    for choice in itertools.product(*options):
        pieces = {cid: degs for cid, degs in zip(ids, choice) if degs != (config.component(cid).multiplicity,)}
        base = DescentData(N, pieces)
        try:
            for cid, degs in zip(ids, choice):
                piece_genus(config, cid, degs[0])
        except (NonIntegralGenus, NegativeGenus):
            continue
        per_edge = []
        for i, n in enumerate(config.nodes):
            ls = _slots(config, n.left, base.degrees(config, n.left), i, 0)
            rs = _slots(config, n.right, base.degrees(config, n.right), i, 1)
            per_edge.append(list(_transports(ls, rs)))
        total = 1
        for opts in per_edge:
            total *= len(opts)
        if total > MAX_MATCHINGS:
            raise BoundExceeded(f"more than {MAX_MATCHINGS} matchings for piece degrees {pieces}")
        for combo in itertools.product(*per_edge):
            matching = {i: m for i, m in enumerate(combo) if len(m) > 1}
            descent = DescentData(N, pieces, matching)
            if not validate_descent(config, descent).valid:
                continue
            out, _ = _glue(config, descent)
            key = canonical_form(out, max_components=None)
            if key in seen:
                continue
            seen.add(key)
            results.append(descent)
            if len(results) >= max_results:
                return results
    if not results:
        raise NoConsistentDescent(f"no genus-conserving connected descent for N={N}")
    return results
