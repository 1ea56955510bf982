"""Single Boolean leaky integrate-and-fire neurons.

Histories are reverse-chronological everywhere in this module: index 0 of
``Neuron.output`` is the most recent output and the last element is the
output at time 0.  An input sequence follows the same convention, so
``after_n_steps(n, [i2, i1], len)`` processes ``i1`` first.

An *input function* is any mapping from identifiers to booleans; missing
identifiers read as ``False``.  Weight maps are mappings from identifiers to
rationals with missing identifiers reading as 0.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence, Tuple

from .errors import ConstraintError
from .numeric import ONE, ZERO, rat, rat_format

__all__ = [
    "NeuronFeature",
    "Neuron",
    "set_neuron",
    "potential",
    "next_potential",
    "next_output",
    "next_neuron",
    "after_n_steps",
    "equiv_feature",
    "equiv_neuron",
    "is_initial_neuron",
    "one_input_or_less",
    "well_formed_neuron",
]


def _natural(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be a natural number, got {value!r}")
    if value < 0:
        raise ValueError(f"{what} must be a natural number, got {value}")
    return value


@dataclass(frozen=True)
class NeuronFeature:
    """Static description of a neuron: identifier, weights, leak and threshold.

    Constraints are checked on construction and reported by name:
    ``LeakRange`` (0 <= leak <= 1), ``PosTau`` (0 < tau),
    ``WRange`` (every weight in [-1, 1]) and ``WId`` (no self-connection).
    """

    id: int
    weights: Mapping[int, Fraction] = field(default_factory=dict)
    leak_factor: Fraction = ZERO
    tau: Fraction = ONE

    def __post_init__(self):
        _natural(self.id, "neuron id")
        leak = rat(self.leak_factor)
        tau = rat(self.tau)
        clean = {}
        for key, raw in self.weights.items():
            _natural(key, "weight key")
            w = rat(raw)
            if not -1 <= w <= 1:
                raise ConstraintError(
                    "WRange", f"weight {self.id}→{key} is {rat_format(w)}"
                )
            if w != 0:
                clean[key] = w
        if not 0 <= leak <= 1:
            raise ConstraintError(
                "LeakRange", f"leak factor of neuron {self.id} is {rat_format(leak)}"
            )
        if not tau > 0:
            raise ConstraintError(
                "PosTau", f"threshold of neuron {self.id} is {rat_format(tau)}"
            )
        if self.id in clean:
            raise ConstraintError(
                "WId",
                f"neuron {self.id} has self-weight {rat_format(clean[self.id])}",
            )
        object.__setattr__(self, "leak_factor", leak)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(clean.items()))))

    def weight(self, source):
        return self.weights.get(source, ZERO)

    def __reduce__(self):
        return (NeuronFeature, (self.id, dict(self.weights), self.leak_factor, self.tau))

    def __hash__(self):
        return hash((self.id, tuple(self.weights.items()), self.leak_factor, self.tau))

    def __eq__(self, other):
        if not isinstance(other, NeuronFeature):
            return NotImplemented
        return (
            self.id == other.id
            and dict(self.weights) == dict(other.weights)
            and self.leak_factor == other.leak_factor
            and self.tau == other.tau
        )


@dataclass(frozen=True)
class Neuron:
    """Dynamic neuron state.

    ``output`` is never empty and its head always equals
    ``feature.tau <= cur_pot``; both are enforced on construction.
    """

    output: Tuple[bool, ...]
    cur_pot: Fraction
    feature: NeuronFeature

    def __post_init__(self):
        output = tuple(bool(b) for b in self.output)
        cur_pot = rat(self.cur_pot)
        if not output:
            raise ValueError("a neuron's output history cannot be empty")
        if (self.feature.tau <= cur_pot) != output[0]:
            raise ConstraintError(
                "CurPot_Output",
                f"head output {int(output[0])} disagrees with potential "
                f"{rat_format(cur_pot)} against threshold {rat_format(self.feature.tau)}",
            )
        object.__setattr__(self, "output", output)
        object.__setattr__(self, "cur_pot", cur_pot)

    @property
    def id(self):
        return self.feature.id


def set_neuron(nf):
    """Initial neuron at time 0: output ``[False]``, potential 0."""
    return Neuron((False,), ZERO, nf)


def potential(ws: Mapping[int, Fraction], inp: Mapping[int, bool], len: int):
    """Weighted sum of the active inputs with identifiers in ``[0, len)``."""
    total = ZERO
    for i in range(len):
        if inp.get(i, False):
            total += ws.get(i, ZERO)
    return total


def next_potential(n: Neuron, inp, len):
    p = potential(n.feature.weights, inp, len)
    if n.feature.tau <= n.cur_pot:
        return p
    return p + n.feature.leak_factor * n.cur_pot


def next_output(n: Neuron, p):
    return n.feature.tau <= p


def next_neuron(inp, len, n: Neuron):
    p = next_potential(n, inp, len)
    return Neuron((next_output(n, p),) + n.output, p, n.feature)


def after_n_steps(n: Neuron, inps: Sequence[Mapping[int, bool]], len):
    """Process ``inps`` (newest first) starting from ``n``."""
    for inp in reversed(inps):
        n = next_neuron(inp, len, n)
    return n


def equiv_feature(f1: NeuronFeature, f2: NeuronFeature, len):
    return (
        f1.id == f2.id
        and all(f1.weight(i) == f2.weight(i) for i in range(len))
        and f1.leak_factor == f2.leak_factor
        and f1.tau == f2.tau
    )


def equiv_neuron(n1: Neuron, n2: Neuron, len):
    return (
        equiv_feature(n1.feature, n2.feature, len)
        and n1.output == n2.output
        and n1.cur_pot == n2.cur_pot
    )


def is_initial_neuron(n: Neuron, len):
    return equiv_neuron(n, set_neuron(n.feature), len)


def one_input_or_less(nf: NeuronFeature, id, len):
    """True when ``id`` is in the environment and no other source is weighted."""
    return id < len and all(
        nf.weight(other) == 0 for other in range(len) if other != id
    )


def well_formed_neuron(n: Neuron):
    return n.output[-1] is False
