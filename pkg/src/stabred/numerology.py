"""Closed-form numbers attached to a smooth curve of genus g >= 2."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import GenusTooSmall


@dataclass(frozen=True)
class NumerologyRecord:
    genus: int
    moduli_dimension: int
    canonical_degree: int
    tricanonical_dimension: int
    embedding_target: int
    hurwitz_bound: int
    severi_min_degree: int
    tricanonical_very_ample: bool

    def items(self):
        return asdict(self).items()


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool):
        raise TypeError(f"genus must be an int, got {g!r}")
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")


def genus_formulas(g: int) -> NumerologyRecord:
    _check_genus(g)
    return NumerologyRecord(
        genus=g,
        moduli_dimension=3 * g - 3,
        canonical_degree=2 * g - 2,
        # h^0 of the tricanonical bundle by Riemann-Roch
        tricanonical_dimension=3 * (2 * g - 2) + 1 - g,
        embedding_target=5 * g - 6,
        hurwitz_bound=42 * (2 * g - 2),
        severi_min_degree=g + 1,
        tricanonical_very_ample=3 * (2 * g - 2) >= 2 * g + 1,
    )


def hilbert_polynomial(g: int, n: int) -> int:
    """Hilbert polynomial of a tricanonically embedded curve, evaluated at ``n``."""
    _check_genus(g)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    value = 3 * n * (2 * g - 2) + 1 - g
    assert value == (6 * n - 1) * (g - 1)
    return value
