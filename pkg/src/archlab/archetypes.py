"""Structural recognizers for the basic neuronal archetypes.

Each predicate reads only the features of a circuit (counts, identifiers
and weights), so stepping a circuit never changes its classification.
Identifier numbering is matched literally; isomorphic relabelings are not
recognized.
"""

from enum import Enum

from .circuit import NeuroCircuit, find_by_id

__all__ = [
    "ArchetypeClass",
    "check_series",
    "check_parallel_composition",
    "check_positive_loop",
    "check_negative_loop",
    "check_inhibition",
    "check_contra_inhib",
    "classify",
]


class ArchetypeClass(Enum):
    SERIES = "series"
    PARALLEL_COMPOSITION = "parallel-composition"
    POSITIVE_LOOP = "positive-loop"
    NEGATIVE_LOOP = "negative-loop"
    INHIBITION = "inhibition"
    CONTRALATERAL_INHIBITION = "contralateral-inhibition"


def _w(c, target, source):
    return find_by_id(c, target).feature.weight(source)


def _first_neuron_ok(c: NeuroCircuit):
    n = len(c)
    return all(_w(c, 0, i) == 0 for i in range(n)) and _w(c, 0, n) > 0


def _chain_shape(c: NeuroCircuit, source_of):
    """Shared body of the series and parallel records.

    ``source_of(m)`` names the only neuron allowed to feed neuron ``m + 1``.
    """
    n = len(c)
    if c.suppl_input != 1 or n == 0 or not _first_neuron_ok(c):
        return False
    for target in range(1, n):
        src = source_of(target - 1)
        if _w(c, target, src) <= 0:
            return False
        if any(_w(c, target, i) != 0 for i in range(n + 1) if i != src):
            return False
    return True


def check_series(c: NeuroCircuit):
    return _chain_shape(c, lambda m: m)


def check_parallel_composition(c: NeuroCircuit):
    return _chain_shape(c, lambda m: 0)


def _two_neuron_loop(c: NeuroCircuit, feedback_ok):
    if c.suppl_input != 1 or len(c) != 2:
        return False
    return (
        feedback_ok(_w(c, 0, 1))
        and _w(c, 0, 2) > 0
        and _w(c, 1, 0) > 0
        and _w(c, 1, 2) == 0
    )


def check_positive_loop(c: NeuroCircuit):
    return _two_neuron_loop(c, lambda w: w > 0)


def check_negative_loop(c: NeuroCircuit):
    return _two_neuron_loop(c, lambda w: w < 0)


def _two_source_pair(c: NeuroCircuit, back_ok):
    if c.suppl_input != 2 or len(c) != 2:
        return False
    return (
        back_ok(_w(c, 0, 1))
        and _w(c, 0, 2) > 0
        and _w(c, 0, 3) == 0
        and _w(c, 1, 0) < 0
        and _w(c, 1, 2) == 0
        and _w(c, 1, 3) > 0
    )


def check_inhibition(c: NeuroCircuit):
    return _two_source_pair(c, lambda w: w == 0)


def check_contra_inhib(c: NeuroCircuit):
    return _two_source_pair(c, lambda w: w < 0)


_CHECKS = {
    ArchetypeClass.SERIES: check_series,
    ArchetypeClass.PARALLEL_COMPOSITION: check_parallel_composition,
    ArchetypeClass.POSITIVE_LOOP: check_positive_loop,
    ArchetypeClass.NEGATIVE_LOOP: check_negative_loop,
    ArchetypeClass.INHIBITION: check_inhibition,
    ArchetypeClass.CONTRALATERAL_INHIBITION: check_contra_inhib,
}


def classify(c: NeuroCircuit):
    """All archetypes whose records ``c`` satisfies (possibly several, possibly none)."""
    return frozenset(kind for kind, check in _CHECKS.items() if check(c))
