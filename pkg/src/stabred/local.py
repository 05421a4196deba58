"""Local structure of the base change ``t -> t^N`` near a point of the central fiber.

Roots of unity are handled as exact fractions of a full turn, so
``Fraction(1, 2)`` stands for ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NotDivisible


def _check_positive(**values):
    for name, v in values.items():
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class SheetSplitting:
    """Near a point lying on a single component of multiplicity ``a``,
    ``u^a = t^N`` factors into ``a`` smooth sheets ``u = zeta t^m``."""

    sheet_count: int
    sheet_exponent: int
    resulting_multiplicity: int = 1


@dataclass(frozen=True)
class NodeBaseChangeResult:
    branch_count: int
    alpha: int
    beta: int
    chain_exponent: int

    @property
    def chain_length(self) -> int:
        return self.chain_exponent - 1

    @property
    def singularity_label(self) -> str:
        if self.chain_exponent == 1:
            return "smooth"
        return f"A_{self.chain_exponent - 1}"


def split_smooth_point(a: int, N: int) -> SheetSplitting:
    _check_positive(a=a, N=N)
    if N % a:
        raise NotDivisible(f"multiplicity {a} does not divide N={N}")
    return SheetSplitting(sheet_count=a, sheet_exponent=N // a)


def node_base_change(a: int, b: int, N: int) -> NodeBaseChangeResult:
    """Pull back a node ``u^a v^b = t`` along ``t -> t^N``.

    The result splits into ``d = gcd(a, b)`` branches ``u^alpha v^beta = zeta t^(m alpha beta)``,
    each normalizing to ``xy = t^m`` with ``m = N / lcm(a, b)``: an ``A_{m-1}``
    point whose resolution is a chain of ``m - 1`` reduced rational curves.
    """
    _check_positive(a=a, b=b, N=N)
    ell = lcm(a, b)
    if N % ell:
        raise NotDivisible(f"lcm({a}, {b}) = {ell} does not divide N={N}")
    d = gcd(a, b)
    res = NodeBaseChangeResult(branch_count=d, alpha=a // d, beta=b // d, chain_exponent=N // ell)
    assert gcd(res.alpha, res.beta) == 1
    assert res.branch_count * res.alpha * res.beta * res.chain_exponent == N
    return res


@dataclass(frozen=True)
class NormalizationWitness:
    injective: bool
    witness: tuple[Fraction, Fraction] | None
    solutions: tuple[tuple[Fraction, Fraction], ...]


def normalization_witness(a: int, b: int) -> NormalizationWitness:
    """Check generic injectivity of ``(x, y, t) -> (x^b, y^a, t)`` on ``xy = t^m``.

    Two preimages of one point differ by ``(zeta, xi)`` with
    ``zeta^b = xi^a = zeta*xi = 1``. Writing ``zeta = e(i/b)`` and ``xi = e(j/a)``
    the last condition reads ``i/b + j/a`` integral. All pairs are enumerated.
    """
    _check_positive(a=a, b=b)
    sols = []
    for i in range(b):
        for j in range(a):
            zeta, xi = Fraction(i, b), Fraction(j, a)
            if (zeta + xi).denominator == 1:
                sols.append((zeta, xi))
    nontrivial = [s for s in sols if s != (0, 0)]
    return NormalizationWitness(
        injective=not nontrivial,
        witness=nontrivial[0] if nontrivial else None,
        solutions=tuple(sols),
    )


def format_root(turn: Fraction) -> str:
    if turn == 0:
        return "1"
    if turn == Fraction(1, 2):
        return "-1"
    return f"exp(2*pi*i*{turn.numerator}/{turn.denominator})"
