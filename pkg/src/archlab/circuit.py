"""Synchronous circuits of neurons.

A circuit with ``n`` neurons uses identifiers ``0..n-1`` for its neurons and
``n..n+suppl_input-1`` for its external sources.  All neurons step in lock
step: at each step a neuron reads the previous step's outputs of the
circuit's neurons and the current values of the external sources.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple

from .errors import DuplicateId, IdOutOfRange, RaggedOutputs
from .neuron import (
    Neuron,
    after_n_steps,
    is_initial_neuron,
    next_neuron,
    set_neuron,
    well_formed_neuron,
)
from .numeric import ZERO

__all__ = [
    "NeuroCircuit",
    "TraceRecord",
    "make_circuit",
    "initial_circuit",
    "next_step",
    "n_steps",
    "find_by_id",
    "output_neuron",
    "curpot_neuron",
    "expand_inputs",
    "is_initial_circuit",
    "well_formed_circuit",
    "simulate",
]


@dataclass(frozen=True)
class NeuroCircuit:
    time: int
    neurons: Tuple[Neuron, ...]
    suppl_input: int

    def __post_init__(self):
        neurons = tuple(self.neurons)
        object.__setattr__(self, "neurons", neurons)
        if isinstance(self.suppl_input, bool) or not isinstance(self.suppl_input, int) \
                or self.suppl_input < 0:
            raise ValueError(f"suppl_input must be a natural number, got {self.suppl_input!r}")
        seen = set()
        for n in neurons:
            if n.id in seen:
                raise DuplicateId(f"two neurons share identifier {n.id}")
            seen.add(n.id)
        for n in neurons:
            if n.id >= len(neurons):
                raise IdOutOfRange(
                    f"neuron id {n.id} is not below the neuron count {len(neurons)}"
                )
        for n in neurons:
            if len(n.output) != self.time + 1:
                raise RaggedOutputs(
                    f"neuron {n.id} has {len(n.output)} outputs, expected {self.time + 1}"
                )

    @property
    def env_len(self):
        """Number of identifiers in the environment (neurons plus sources)."""
        return len(self.neurons) + self.suppl_input

    @property
    def external_ids(self):
        return range(len(self.neurons), self.env_len)

    def __len__(self):
        return len(self.neurons)


@dataclass(frozen=True)
class TraceRecord:
    t: int
    outputs: Tuple[bool, ...]
    potentials: Tuple[Fraction, ...]


def make_circuit(neurons: Sequence[Neuron], suppl_input: int):
    """Validate ``neurons`` and wrap them in a circuit.

    The time is taken from the common history length.  Raises
    :class:`DuplicateId`, :class:`IdOutOfRange` or :class:`RaggedOutputs`.
    """
    neurons = tuple(neurons)
    lengths = {len(n.output) for n in neurons}
    if len(lengths) > 1:
        raise RaggedOutputs(f"output histories have different lengths {sorted(lengths)}")
    time = lengths.pop() - 1 if lengths else 0
    return NeuroCircuit(time, neurons, suppl_input)


def initial_circuit(features, suppl_input):
    return make_circuit([set_neuron(f) for f in features], suppl_input)


def find_by_id(c: NeuroCircuit, id) -> Optional[Neuron]:
    for n in c.neurons:
        if n.id == id:
            return n
    return None


def _environment_input(c: NeuroCircuit, inp: Mapping[int, bool]):
    # previous-step outputs for internal ids, current values for sources
    full = {n.id: n.output[0] for n in c.neurons}
    for x in c.external_ids:
        full[x] = bool(inp.get(x, False))
    return full


def next_step(c: NeuroCircuit, inp: Mapping[int, bool]):
    env = _environment_input(c, inp)
    stepped = tuple(next_neuron(env, c.env_len, n) for n in c.neurons)
    return NeuroCircuit(c.time + 1, stepped, c.suppl_input)


def n_steps(c: NeuroCircuit, inps: Sequence[Mapping[int, bool]]):
    """Process external inputs given newest first."""
    for inp in reversed(inps):
        c = next_step(c, inp)
    return c


def output_neuron(c: NeuroCircuit, inps, id):
    n = find_by_id(n_steps(c, inps), id)
    return n.output if n is not None else ()


def curpot_neuron(c: NeuroCircuit, inps, id):
    n = find_by_id(n_steps(c, inps), id)
    return n.cur_pot if n is not None else ZERO


def expand_inputs(c: NeuroCircuit, inps):
    """Rewrite circuit inputs as whole-environment input functions.

    Step ``k`` (oldest first) maps each neuron id to that neuron's head
    output after ``k - 1`` circuit steps and each external id to its value
    in ``inps``.  Feeding the result to :func:`after_n_steps` for any neuron
    of ``c`` with ``len = c.env_len`` reproduces the circuit simulation.
    """
    expanded = []
    for inp in reversed(inps):
        expanded.append(_environment_input(c, inp))
        c = next_step(c, inp)
    expanded.reverse()
    return expanded


def is_initial_circuit(c: NeuroCircuit):
    return all(is_initial_neuron(n, c.env_len) for n in c.neurons)


def well_formed_circuit(c: NeuroCircuit):
    return all(well_formed_neuron(n) for n in c.neurons)


def simulate(c: NeuroCircuit, inps):
    """Chronological trace: the current state, then one record per step."""

    def record(cc):
        ordered = sorted(cc.neurons, key=lambda n: n.id)
        return TraceRecord(
            cc.time,
            tuple(n.output[0] for n in ordered),
            tuple(n.cur_pot for n in ordered),
        )

    trace = [record(c)]
    for inp in reversed(inps):
        c = next_step(c, inp)
        trace.append(record(c))
    return trace


def neuron_view(c: NeuroCircuit, inps, id):
    """The standalone-neuron route: ``after_n_steps`` over expanded inputs."""
    n = find_by_id(c, id)
    if n is None:
        return None
    return after_n_steps(n, expand_inputs(c, inps), c.env_len)
