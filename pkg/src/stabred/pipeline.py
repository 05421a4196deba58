"""The three-step reduction: base change, chain insertion, contraction."""

from __future__ import annotations

from dataclasses import dataclass

from .basechange import DescentData, apply_base_change, search_descent, total_multiplicity_lcm
from .errors import InternalInconsistency, StableReductionError, ZariskiViolation
from .model import (
    FiberConfiguration,
    StabilityReport,
    arithmetic_genus,
    require_genus_at_least_two,
    require_valid,
    stability_report,
)
from .stabilize import stabilize, zariski_offenders
from .trace import MoveTrace


@dataclass(frozen=True)
class Stage:
    name: str
    config: FiberConfiguration
    arithmetic_genus: int


@dataclass(frozen=True)
class PipelineResult:
    input: FiberConfiguration
    stages: tuple[Stage, ...]
    descent: DescentData
    descent_candidates: int
    trace: MoveTrace
    stability: StabilityReport

    @property
    def final(self) -> FiberConfiguration:
        return self.stages[-1].config

    @property
    def genus_audit(self) -> list[tuple[str, int]]:
        return [(s.name, s.arithmetic_genus) for s in self.stages]


def check_zariski(config: FiberConfiguration) -> None:
    offenders = zariski_offenders(config)
    if offenders:
        raise ZariskiViolation(
            f"component(s) {', '.join(offenders)} meet no other component (E^2=0); "
            "impossible in a connected fiber by Zariski's main theorem"
        )


def reduce_fiber(
    config: FiberConfiguration,
    N: int | None = None,
    descent: DescentData | None = None,
    max_results: int = 8,
) -> PipelineResult:
    check_zariski(config)
    require_valid(config)
    require_genus_at_least_two(config)
    if descent is None:
        n = N if N is not None else total_multiplicity_lcm(config)
        candidates = search_descent(config, n, max_results)
        descent = candidates[0]
        count = len(candidates)
    else:
        if N is not None and N != descent.N:
            raise StableReductionError(f"--N {N} conflicts with descent N={descent.N}")
        count = 1
    reduced, bc_trace = apply_base_change(config, descent)
    stable, st_trace = stabilize(reduced)
    stages = (
        Stage("input", config, arithmetic_genus(config)),
        Stage("base change", reduced, arithmetic_genus(reduced)),
        Stage("stable", stable, arithmetic_genus(stable)),
    )
    if len({s.arithmetic_genus for s in stages}) != 1:
        raise InternalInconsistency("genus audit failed: " + ", ".join(f"{s.name}={s.arithmetic_genus}" for s in stages))
    return PipelineResult(config, stages, descent, count, bc_trace + st_trace, stability_report(stable))
