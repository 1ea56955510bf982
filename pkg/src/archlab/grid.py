"""Parameter grids and the sweep driver.

A grid maps parameter names to lists of rationals.  ``tau`` and ``leak``
apply to every neuron; ``tau<i>`` and ``leak<i>`` override them for neuron
``i``.  Weights are named ``w`` on the lone-neuron template and
``w<target>_<source>`` on circuit templates.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Dict, List, Optional

from .circuit import initial_circuit
from .errors import ArchlabError, SchemaError
from .neuron import NeuronFeature, set_neuron
from .numeric import rat, rat_format
from .properties import (
    NEURON_LEVEL,
    NeuronContext,
    PropertyId,
    Verdict,
    default_family,
    verify_bounded,
)

__all__ = [
    "DEFAULT_GRID",
    "CIRCUIT_TEMPLATES",
    "default_grid",
    "context_from_params",
    "SweepRow",
    "sweep",
    "parse_grid",
]

DEFAULT_GRID = {
    "tau": ["1/3", "1/2", "1"],
    "w": ["-1", "-1/2", "-1/4", "1/4", "1/2", "1"],
    "leak": ["0", "1/2", "1"],
}

_SERIES = {"suppl_input": 1, "weights": {"w0_3": "1", "w1_0": "1", "w2_1": "1"}}
_PARALLEL = {"suppl_input": 1, "weights": {"w0_3": "1", "w1_0": "1", "w2_0": "1"}}
_POS_LOOP = {"suppl_input": 1, "weights": {"w0_1": "1", "w0_2": "1", "w1_0": "1"}}
_CONTRA = {
    "suppl_input": 2,
    "weights": {"w0_1": "-1/2", "w0_2": "1", "w1_0": "-1", "w1_3": "1"},
}

CIRCUIT_TEMPLATES = {
    PropertyId.SERIES_DELAYER: _SERIES,
    PropertyId.PARALLEL_DELAYER_0: _PARALLEL,
    PropertyId.PARALLEL_DELAYER_SUCC: _PARALLEL,
    PropertyId.PL_ZEROS: _POS_LOOP,
    PropertyId.PL_TWO_ONES: _POS_LOOP,
    PropertyId.PL_SINGLE_ONE: _POS_LOOP,
    PropertyId.NL_CASE1: {"suppl_input": 1, "weights": {"w0_1": "-1", "w0_2": "1", "w1_0": "1"}},
    PropertyId.NL_CASE2: {"suppl_input": 1, "weights": {"w0_1": "-3/4", "w0_2": "1", "w1_0": "1"}},
    PropertyId.CI_WINNER_TAKES_ALL: _CONTRA,
}

_WEIGHT_NAME = re.compile(r"w([0-9]+)_([0-9]+)")
_PER_NEURON = re.compile(r"(tau|leak)([0-9]+)")


def default_grid(p: PropertyId):
    if p in NEURON_LEVEL:
        return dict(DEFAULT_GRID)
    return {"tau": DEFAULT_GRID["tau"], "leak": DEFAULT_GRID["leak"]}


def _neuron_count(weights):
    ids = [0]
    for name in weights:
        m = _WEIGHT_NAME.fullmatch(name)
        ids.append(int(m.group(1)))
    return max(ids) + 1


def context_from_params(p: PropertyId, params: Dict[str, object]):
    """Instantiate the template of ``p`` at one grid point.

    Raises :class:`~archlab.errors.ConstraintError` when the point violates a
    record constraint and :class:`SchemaError` on unknown parameter names.
    """
    params = {k: rat(v) for k, v in params.items()}
    tau = params.get("tau", rat(1))
    leak = params.get("leak", rat(0))
    if p in NEURON_LEVEL:
        unknown = set(params) - {"tau", "leak", "w"}
        if unknown:
            raise SchemaError(f"unknown grid parameters {sorted(unknown)}")
        f = NeuronFeature(0, {1: params.get("w", rat(1))}, leak, tau)
        return NeuronContext(set_neuron(f), (1,), 2)

    template = CIRCUIT_TEMPLATES[p]
    weights = dict(template["weights"])
    for name, value in params.items():
        if name in ("tau", "leak") or _PER_NEURON.fullmatch(name):
            continue
        if not _WEIGHT_NAME.fullmatch(name):
            raise SchemaError(f"unknown grid parameter {name!r}")
        weights[name] = value
    n = _neuron_count(template["weights"])
    per = {i: {} for i in range(n)}
    for name, value in weights.items():
        m = _WEIGHT_NAME.fullmatch(name)
        target, source = int(m.group(1)), int(m.group(2))
        if target >= n:
            raise SchemaError(f"{name}: the template has {n} neurons")
        per[target][source] = rat(value)
    features = [
        NeuronFeature(
            i,
            per[i],
            params.get(f"leak{i}", leak),
            params.get(f"tau{i}", tau),
        )
        for i in range(n)
    ]
    return initial_circuit(features, template["suppl_input"])


@dataclass(frozen=True)
class SweepRow:
    params: Dict[str, str]
    verdict: Optional[Verdict]
    error: Optional[str] = None

    @property
    def status(self):
        return "INVALID" if self.verdict is None else self.verdict.status.value


def parse_grid(data):
    """Validate a decoded grid document (a map of names to rational-text lists)."""
    if not isinstance(data, dict):
        raise SchemaError("grid must be a JSON object")
    grid = {}
    for name, values in data.items():
        if not isinstance(values, list) or not values:
            raise SchemaError(f"grid parameter {name!r} needs a non-empty list")
        for v in values:
            if not isinstance(v, str):
                raise SchemaError(f"grid value {v!r} for {name!r} must be rational text")
        grid[name] = [rat_format(rat(v)) for v in values]
    return grid


def sweep(p: PropertyId, grid=None, family=None, jobs=1) -> List[SweepRow]:
    """One row per grid point, in the grid's name order then value order."""
    grid = default_grid(p) if grid is None else grid
    family = family or default_family(p)
    names = list(grid)
    rows = []
    for values in itertools.product(*(grid[n] for n in names)):
        params = dict(zip(names, values))
        try:
            ctx = context_from_params(p, params)
        except SchemaError:
            raise
        except ArchlabError as exc:
            rows.append(SweepRow(params, None, str(exc)))
            continue
        rows.append(SweepRow(params, verify_bounded(p, ctx, family, jobs=jobs)))
    return rows
