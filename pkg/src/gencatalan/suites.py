"""Named verification suites over parameter grids."""

from __future__ import annotations

from . import factorization as fz
from .catbert import catbert_report
from .numbertheory import (
    certificate_report,
    lucas_scan,
    lucas_var1_scan,
    lucas_var2_scan,
    lucas_var3_scan,
)
from .params import CATBERT, GCParams, param_grid
from .reports import Report
from .sequences import check_shift_recurrences

# default sizes match the acceptance run
DEFAULT_SIZES = {
    "shift": 60,
    "three-term": 12,
    "orthogonality": 12,
    "norm": 12,
    "nl-eq-mk": 12,
    "symmetry": 10,
    "inverse": 10,
    "integrality": 10,
    "determinants": 10,
    "certificates": 8,
    "catbert": 15,
}

LUCAS_VAR1_PAIRS = ((3, 2), (2, 3), (5, 2), (3, 4))
LUCAS_VAR3_PAIRS = ((2, -3), (3, 2), (5, -2))


def _per_params(grid, fn, size):
    return [fn(params, size) for params in grid]


def _inverse_sizes(grid, fn, size):
    return [fn(params, n) for params in grid for n in range(1, size + 1)]


def _integrality(grid, size):
    out = []
    for params in grid:
        for n in range(1, size + 1):
            out.append(fz.scaled_inverse_integrality(params, n))
            if abs(params.q) <= 2:
                out.append(fz.main_integrality(params, n))
    return out


def _lucas(_grid, _size):
    out = [lucas_scan(p, 200) for p in (2, 3, 5)]
    out += [lucas_var1_scan(q, p, 120, 60) for q, p in LUCAS_VAR1_PAIRS]
    out.append(lucas_var2_scan(120))
    out += [lucas_var3_scan(p, q, -50, 50, 60) for p, q in LUCAS_VAR3_PAIRS]
    return out


def _certificates(grid, size):
    out = [certificate_report(CATBERT, size, t) for t in (2, 3)]
    out += [certificate_report(params, size, 2) for params in grid if abs(params.q) == 2]
    return out


SUITES = {
    "shift": lambda grid, size: _per_params(grid, check_shift_recurrences, size),
    "three-term": lambda grid, size: _per_params(grid, fz.verify_three_term, size),
    "orthogonality": lambda grid, size: _per_params(grid, fz.verify_orthogonality, size)
    + _per_params(grid, fz.verify_lg_upper, size),
    "norm": lambda grid, size: _per_params(grid, fz.verify_norm, size),
    "nl-eq-mk": lambda grid, size: _per_params(grid, fz.verify_NL_eq_MK, size),
    "symmetry": lambda grid, size: _per_params(grid, fz.verify_summand_symmetry, size),
    "inverse": lambda grid, size: _inverse_sizes(grid, fz.verify_inverse, size),
    "integrality": _integrality,
    "determinants": lambda grid, size: _per_params(grid, fz.verify_determinants, size),
    "lucas": _lucas,
    "certificates": _certificates,
    "catbert": lambda grid, size: [catbert_report(size)],
}


def run_suite(name: str, grid: list[GCParams] | None = None, size: int | None = None) -> list[Report]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if grid is None:
        grid = param_grid()
    if size is None:
        size = DEFAULT_SIZES.get(name, 0)
    return SUITES[name](grid, size)
