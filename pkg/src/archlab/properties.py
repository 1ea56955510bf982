"""Executable oracles for neuron, circuit and archetype behaviours.

Every property pairs a hypothesis check with either a closed-form expected
output or a predicate over the simulated output.  :func:`check_once` runs a
single input sequence; :func:`verify_bounded` quantifies over an
:class:`InputFamily`, exhaustively or by seeded random draws.

Input sequences here are *bit sequences*: reverse-chronological tuples of
steps, one step being a tuple of booleans, one per source.  Sources are the
external ids of a circuit (ascending) or the ``sources`` of a
:class:`NeuronContext`.  A bare boolean counts as a one-source step.
"""

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .archetypes import (
    check_contra_inhib,
    check_negative_loop,
    check_parallel_composition,
    check_positive_loop,
    check_series,
)
from .circuit import NeuroCircuit, find_by_id, is_initial_circuit, next_step
from .errors import EmptyPattern, HypothesesNotMet
from .neuron import Neuron, is_initial_neuron, next_neuron, one_input_or_less
from .numeric import ONE, ZERO

__all__ = [
    "PropertyId",
    "NeuronContext",
    "Counterexample",
    "Verdict",
    "Status",
    "AllSequences",
    "AllOnes",
    "AllZeros",
    "ZerosWithOneAt",
    "ZerosThenTwoOnesThenAny",
    "repeat_value",
    "repeat_pattern",
    "suffix",
    "count_true",
    "bits",
    "bitstr",
    "failed_hypothesis",
    "hypotheses_hold",
    "expected_output",
    "check_once",
    "verify_bounded",
    "default_family",
    "replay",
]


class PropertyId(Enum):
    DELAYER_EFFECT = "delayer-effect"
    FILTERING_EFFECT = "filtering-effect"
    GENERAL_BEHAVIOR = "general-behavior"
    SPIKE_DECREASING = "spike-decreasing"
    INHIBITOR_EFFECT = "inhibitor-effect"
    ALWAYS_NON_NEG_CUR_POT = "always-non-neg-cur-pot"
    SERIES_DELAYER = "series-delayer"
    PARALLEL_DELAYER_0 = "parallel-delayer0"
    PARALLEL_DELAYER_SUCC = "parallel-delayer-succ"
    PL_ZEROS = "pl-zeros"
    PL_TWO_ONES = "pl-two-ones"
    PL_SINGLE_ONE = "pl-single-one"
    NL_CASE1 = "nl-case1"
    NL_CASE2 = "nl-case2"
    CI_WINNER_TAKES_ALL = "ci-winner-takes-all"

    @classmethod
    def parse(cls, name):
        try:
            return cls(name)
        except ValueError:
            known = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown property {name!r}; known: {known}") from None


NEURON_LEVEL = frozenset({
    PropertyId.DELAYER_EFFECT,
    PropertyId.FILTERING_EFFECT,
    PropertyId.GENERAL_BEHAVIOR,
    PropertyId.SPIKE_DECREASING,
    PropertyId.INHIBITOR_EFFECT,
    PropertyId.ALWAYS_NON_NEG_CUR_POT,
})
SINGLE_INPUT = frozenset({
    PropertyId.DELAYER_EFFECT,
    PropertyId.FILTERING_EFFECT,
    PropertyId.GENERAL_BEHAVIOR,
    PropertyId.SPIKE_DECREASING,
})


@dataclass(frozen=True)
class NeuronContext:
    """A lone neuron in an environment of ``env_len`` identifiers.

    The generated inputs drive the identifiers in ``sources``; every other
    identifier stays false.
    """

    neuron: Neuron
    sources: Tuple[int, ...]
    env_len: int

    @property
    def width(self):
        return len(self.sources)


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    HYPOTHESES_NOT_MET = "HYPOTHESES-NOT-MET"


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple
    neuron_id: int
    time: Optional[int]
    expected: Optional[tuple]
    actual: tuple
    detail: str


@dataclass(frozen=True)
class Verdict:
    prop: PropertyId
    status: Status
    checked_count: int = 0
    counterexample: Optional[Counterexample] = None
    hypothesis: Optional[str] = None

    def __post_init__(self):
        if self.status is Status.FAIL and self.counterexample is None:
            raise ValueError("a failing verdict needs a counterexample")

    @property
    def passed(self):
        return self.status is Status.PASS


# -- list helpers ------------------------------------------------------------


def repeat_value(v, n):
    return (bool(v),) * n


def repeat_pattern(pattern, n):
    """``n`` elements cycling through ``pattern`` from the end of the result.

    ``repeat_pattern([1, 0], 3) == (1, 0, 1)``: the first pattern element is
    the last (oldest) element of the result.
    """
    pattern = tuple(bool(b) for b in pattern)
    if n > 0 and not pattern:
        raise EmptyPattern("cannot repeat an empty pattern")
    return tuple(pattern[(n - 1 - k) % len(pattern)] for k in range(n))


def suffix(seq, i):
    return tuple(seq[i:])


def count_true(seq):
    return sum(1 for b in seq if b)


def bits(text):
    """``"1001"`` -> ``(True, False, False, True)``, keeping the written order."""
    return tuple(c == "1" for c in text)


def bitstr(seq):
    return "".join("1" if b else "0" for b in seq)


# -- contexts ----------------------------------------------------------------


def _width(ctx):
    return ctx.suppl_input if isinstance(ctx, NeuroCircuit) else ctx.width


def _initial_state(ctx):
    return ctx if isinstance(ctx, NeuroCircuit) else ctx.neuron


def _advance(ctx, state, step):
    if isinstance(ctx, NeuroCircuit):
        lo = len(ctx.neurons)
        return next_step(state, {lo + j: b for j, b in enumerate(step)})
    inp = {src: b for src, b in zip(ctx.sources, step)}
    return next_neuron(inp, ctx.env_len, state)


def _normalize(seq, width):
    out = []
    for step in seq:
        if isinstance(step, bool) or isinstance(step, int):
            step = (bool(step),)
        step = tuple(bool(b) for b in step)
        if len(step) != width:
            raise ValueError(f"input step {step} does not have width {width}")
        out.append(step)
    return tuple(out)


def _simulate(ctx, seq):
    state = _initial_state(ctx)
    for step in reversed(seq):
        state = _advance(ctx, state, step)
    return state


class _Runner:
    """Simulator memoized on oldest-first prefixes, so families that share
    prefixes are simulated once per distinct prefix."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.cache = {(): _initial_state(ctx)}

    def final(self, seq):
        chrono = tuple(reversed(seq))
        return self._state(chrono)

    def _state(self, chrono):
        state = self.cache.get(chrono)
        if state is None:
            state = _advance(self.ctx, self._state(chrono[:-1]), chrono[-1])
            self.cache[chrono] = state
        return state


def _neuron_out(ctx, final, nid):
    if isinstance(ctx, NeuroCircuit):
        return find_by_id(final, nid)
    return final


# -- hypotheses -------------------------------------------------------------


def _single_source(f, env_len):
    """The unique weighted source of ``f`` inside the environment, if any."""
    live = [i for i in range(env_len) if f.weight(i) != 0]
    return live[0] if len(live) == 1 else None


def _neuron_subjects(p, ctx):
    """(neuron id, source id) pairs the property applies to, or a failure text."""
    if isinstance(ctx, NeuronContext):
        f = ctx.neuron.feature
        if not is_initial_neuron(ctx.neuron, ctx.env_len):
            return "is_initial_neuron"
        if any(s >= ctx.env_len for s in ctx.sources):
            return "sources inside the environment"
        if p in SINGLE_INPUT:
            if len(ctx.sources) != 1 or not one_input_or_less(f, ctx.sources[0], ctx.env_len):
                return "One_Input_Or_Less"
            src = ctx.sources[0]
            if p is PropertyId.DELAYER_EFFECT and not f.weight(src) >= f.tau:
                return "w(id) >= tau"
            if p is PropertyId.FILTERING_EFFECT and not f.weight(src) < f.tau:
                return "w(id) < tau"
            return [(f.id, src)]
        if p is PropertyId.INHIBITOR_EFFECT:
            if any(f.weight(i) > 0 for i in range(ctx.env_len)):
                return "all weights <= 0"
        if p is PropertyId.ALWAYS_NON_NEG_CUR_POT:
            if any(f.weight(i) < 0 for i in range(ctx.env_len)):
                return "all weights >= 0"
        return [(f.id, None)]

    c = ctx
    if not is_initial_circuit(c):
        return "is_initial_circuit"
    subjects = []
    for n in sorted(c.neurons, key=lambda n: n.id):
        f = n.feature
        if p in SINGLE_INPUT:
            src = _single_source(f, c.env_len)
            if src is None:
                continue
            if p is PropertyId.DELAYER_EFFECT and not f.weight(src) >= f.tau:
                continue
            if p is PropertyId.FILTERING_EFFECT and not f.weight(src) < f.tau:
                continue
            subjects.append((n.id, src))
        elif p is PropertyId.INHIBITOR_EFFECT:
            if all(f.weight(i) <= 0 for i in range(c.env_len)):
                subjects.append((n.id, None))
        elif p is PropertyId.ALWAYS_NON_NEG_CUR_POT:
            if all(f.weight(i) >= 0 for i in range(c.env_len)):
                subjects.append((n.id, None))
    if not subjects:
        return {
            PropertyId.DELAYER_EFFECT: "a single-input neuron with w(id) >= tau",
            PropertyId.FILTERING_EFFECT: "a single-input neuron with w(id) < tau",
            PropertyId.GENERAL_BEHAVIOR: "a single-input neuron",
            PropertyId.SPIKE_DECREASING: "a single-input neuron",
            PropertyId.INHIBITOR_EFFECT: "a neuron with all weights <= 0",
            PropertyId.ALWAYS_NON_NEG_CUR_POT: "a neuron with all weights >= 0",
        }[p]
    return subjects


def _w(c, target, source):
    return find_by_id(c, target).feature.weight(source)


def _tau(c, nid):
    return find_by_id(c, nid).feature.tau


def _archetype_failure(p, c):
    """First unmet hypothesis of a circuit-level property, or None."""
    if not isinstance(c, NeuroCircuit):
        return "a circuit context"
    n = len(c)
    if p is PropertyId.SERIES_DELAYER:
        if not check_series(c):
            return "Series"
    elif p in (PropertyId.PARALLEL_DELAYER_0, PropertyId.PARALLEL_DELAYER_SUCC):
        if not check_parallel_composition(c):
            return "ParallelComposition"
    elif p in (PropertyId.PL_ZEROS, PropertyId.PL_TWO_ONES, PropertyId.PL_SINGLE_ONE):
        if not check_positive_loop(c):
            return "PositiveLoop"
    elif p in (PropertyId.NL_CASE1, PropertyId.NL_CASE2):
        if not check_negative_loop(c):
            return "NegativeLoop"
    elif p is PropertyId.CI_WINNER_TAKES_ALL:
        if not check_contra_inhib(c):
            return "ContraInhib"
    if not is_initial_circuit(c):
        return "is_initial_circuit"

    if p is PropertyId.SERIES_DELAYER:
        if not _w(c, 0, n) >= _tau(c, 0):
            return "w0(ext) >= tau0"
        for i in range(n - 1):
            if not _w(c, i + 1, i) >= _tau(c, i + 1):
                return f"w{i + 1}({i}) >= tau{i + 1}"
    elif p in (PropertyId.PARALLEL_DELAYER_0, PropertyId.PARALLEL_DELAYER_SUCC):
        if not _w(c, 0, n) >= _tau(c, 0):
            return "w0(ext) >= tau0"
        if p is PropertyId.PARALLEL_DELAYER_SUCC:
            if n < 2:
                return "a neuron with id != 0"
            for i in range(1, n):
                if not _w(c, i, 0) >= _tau(c, i):
                    return f"w{i}(0) >= tau{i}"
    elif p in (PropertyId.PL_ZEROS, PropertyId.PL_TWO_ONES, PropertyId.PL_SINGLE_ONE):
        if not _w(c, 0, 2) >= _tau(c, 0):
            return "w0(2) >= tau0"
        if not _w(c, 0, 1) >= _tau(c, 0):
            return "w0(1) >= tau0"
        if not _w(c, 1, 0) >= _tau(c, 1):
            return "w1(0) >= tau1"
    elif p in (PropertyId.NL_CASE1, PropertyId.NL_CASE2):
        if not _w(c, 0, 2) >= _tau(c, 0):
            return "w0(2) >= tau0"
        if not _w(c, 1, 0) >= _tau(c, 1):
            return "w1(0) >= tau1"
        w1, w2 = _w(c, 0, 1), _w(c, 0, 2)
        if p is PropertyId.NL_CASE1:
            if w1 != -w2:
                return "w0(1) = -w0(2)"
        else:
            if not w1 + w2 >= 0:
                return "w1+w2 >= 0"
            lk = find_by_id(c, 0).feature.leak_factor
            if not (ONE + lk) * (w1 + w2) < _tau(c, 0):
                return "(1+lk)(w1+w2) < tau"
    elif p is PropertyId.CI_WINNER_TAKES_ALL:
        if not _w(c, 0, 1) + _w(c, 0, 2) >= _tau(c, 0):
            return "w0(1)+w0(2) >= tau0"
        if not _w(c, 1, 3) >= _tau(c, 1):
            return "w1(3) >= tau1"
        if not _w(c, 1, 0) + _w(c, 1, 3) <= 0:
            return "w1(0)+w1(3) <= 0"
    return None


def failed_hypothesis(p: PropertyId, ctx):
    """Name of the first unmet hypothesis of ``p`` on ``ctx``, or None."""
    if p in NEURON_LEVEL:
        subjects = _neuron_subjects(p, ctx)
        return subjects if isinstance(subjects, str) else None
    return _archetype_failure(p, ctx)


def hypotheses_hold(p: PropertyId, ctx):
    return failed_hypothesis(p, ctx) is None


# -- input shapes ------------------------------------------------------------


def _oldest_one(seq):
    """Index (from the head) of the chronologically first true step, or None."""
    for k in range(len(seq) - 1, -1, -1):
        if seq[k][0]:
            return k
    return None


def _split_two_ones(seq):
    """Decompose ``inp1 ++ [1;1] ++ inp2`` with ``inp2`` all zeros."""
    j = _oldest_one(seq)
    if j is None or j == 0 or not seq[j - 1][0]:
        return None
    return seq[: j - 1], seq[j + 1:]


def _split_single_one(seq):
    ones = [k for k, step in enumerate(seq) if step[0]]
    if len(ones) != 1:
        return None
    j = ones[0]
    return seq[:j], seq[j + 1:]


def input_failure(p: PropertyId, seq):
    """Name of the input-shape hypothesis ``seq`` violates, or None."""
    if p is PropertyId.PL_ZEROS:
        if any(s[0] for s in seq):
            return "all inputs 0"
    elif p is PropertyId.PL_TWO_ONES:
        if _split_two_ones(seq) is None:
            return "input of the form inp1 ++ [1;1] ++ zeros"
    elif p is PropertyId.PL_SINGLE_ONE:
        if _split_single_one(seq) is None:
            return "input zeros except a single 1"
    elif p in (PropertyId.NL_CASE1, PropertyId.NL_CASE2, PropertyId.CI_WINNER_TAKES_ALL):
        if not all(all(s) for s in seq):
            return "all inputs 1"
    return None


# -- oracles -----------------------------------------------------------------


class _Predicate:
    def __init__(self, name, fn):
        self.name = name
        self.fn = fn

    def __call__(self, actual, received):
        return self.fn(actual, received)

    def __repr__(self):
        return f"<{self.name}>"


def _no_adjacent_spikes(actual, _received=None):
    return not any(a and b for a, b in zip(actual, actual[1:]))


_NO_ADJACENT = _Predicate("no two adjacent spikes", _no_adjacent_spikes)
_GENERAL = _Predicate(
    "delayed input or no two adjacent spikes",
    lambda actual, received: actual == received + (False,) or _no_adjacent_spikes(actual),
)
_SPIKES_BOUNDED = _Predicate(
    "spike count at most input spike count",
    lambda actual, received: count_true(actual) <= count_true(received),
)
_SILENT = _Predicate("never fires", lambda actual, received: not any(actual))


def _received(ctx, seq, final, src):
    """What neuron sees from ``src`` over ``seq``, newest first."""
    if isinstance(ctx, NeuronContext):
        return tuple(step[ctx.sources.index(src)] for step in seq)
    lo = len(ctx.neurons)
    if src >= lo:
        return tuple(step[src - lo] for step in seq)
    return find_by_id(final, src).output[1:]


def _archetype_expected(p, c, seq):
    L = len(seq)
    inp = tuple(step[0] for step in seq)
    if p is PropertyId.SERIES_DELAYER:
        out = {}
        for nid in range(len(c)):
            if nid <= L:
                out[nid] = suffix(inp, nid) + repeat_value(False, nid + 1)
            else:
                out[nid] = repeat_value(False, L + 1)
        return out
    if p is PropertyId.PARALLEL_DELAYER_0:
        return {0: inp + (False,)}
    if p is PropertyId.PARALLEL_DELAYER_SUCC:
        leaf = suffix(inp, 1) + (False, False) if L > 0 else (False,)
        return {nid: leaf for nid in range(1, len(c))}
    if p is PropertyId.PL_ZEROS:
        return {0: repeat_value(False, L + 1), 1: repeat_value(False, L + 1)}
    if p is PropertyId.PL_TWO_ONES:
        inp1, inp2 = _split_two_ones(seq)
        a, b = len(inp1), len(inp2)
        return {
            0: repeat_value(True, a + 2) + repeat_value(False, b + 1),
            1: repeat_value(True, a + 1) + repeat_value(False, b + 2),
        }
    if p is PropertyId.PL_SINGLE_ONE:
        inp1, inp2 = _split_single_one(seq)
        a, b = len(inp1), len(inp2)
        return {
            0: repeat_pattern((True, False), a + 1) + repeat_value(False, b + 1),
            1: repeat_pattern((True, False), a) + repeat_value(False, b + 2),
        }
    if p in (PropertyId.NL_CASE1, PropertyId.NL_CASE2):
        return {
            0: repeat_pattern((False, True, True, False), L + 1),
            1: repeat_pattern((False, False, True, True), L + 1),
        }
    if p is PropertyId.CI_WINNER_TAKES_ALL:
        n1 = (False,) if L == 0 else repeat_value(False, L - 1) + (True, False)
        return {0: repeat_value(True, L) + (False,), 1: n1}
    raise AssertionError(p)


def expected_output(p: PropertyId, ctx, inp, final=None):
    """Per-neuron expectation for input ``inp``.

    Values are tuples (exact expected output histories) for constructive
    properties, or predicates over ``(actual, received)`` otherwise.  For
    neuron-level properties inside a circuit the expectation of a neuron fed
    by another neuron is stated in terms of that neuron's simulated output.
    Raises :class:`HypothesesNotMet`.
    """
    seq = _normalize(inp, _width(ctx))
    failure = failed_hypothesis(p, ctx) or input_failure(p, seq)
    if failure:
        raise HypothesesNotMet(p.value, failure)
    if final is None:
        final = _simulate(ctx, seq)
    return _expected(p, ctx, seq, final, _subjects(p, ctx))


def _subjects(p, ctx):
    return _neuron_subjects(p, ctx) if p in NEURON_LEVEL else None


def _expected(p, ctx, seq, final, subjects):
    if p not in NEURON_LEVEL:
        return _archetype_expected(p, ctx, seq)
    out = {}
    for nid, src in subjects:
        if p is PropertyId.DELAYER_EFFECT:
            out[nid] = _received(ctx, seq, final, src) + (False,)
        elif p is PropertyId.FILTERING_EFFECT:
            out[nid] = _NO_ADJACENT
        elif p is PropertyId.GENERAL_BEHAVIOR:
            out[nid] = _GENERAL
        elif p is PropertyId.SPIKE_DECREASING:
            out[nid] = _SPIKES_BOUNDED
        elif p is PropertyId.INHIBITOR_EFFECT:
            out[nid] = _SILENT
        else:
            out[nid] = None  # potential check, see _mismatch
    return out


def _first_divergence(expected, actual):
    e, a = tuple(reversed(expected)), tuple(reversed(actual))
    for t, (x, y) in enumerate(zip(e, a)):
        if x != y:
            return t
    return min(len(e), len(a))


def _predicate_time(p, actual):
    chrono = tuple(reversed(actual))
    if p is PropertyId.INHIBITOR_EFFECT:
        return next(t for t, b in enumerate(chrono) if b)
    if p in (PropertyId.FILTERING_EFFECT, PropertyId.GENERAL_BEHAVIOR):
        for t in range(1, len(chrono)):
            if chrono[t - 1] and chrono[t]:
                return t
    return None


def _mismatch(p, ctx, seq, final, subjects=None):
    """First failing neuron as a Counterexample, or None when all match.

    Hypotheses are assumed to hold; ``subjects`` caches the qualifying
    neurons of a neuron-level property.
    """
    if subjects is None:
        subjects = _subjects(p, ctx)
    expected = _expected(p, ctx, seq, final, subjects)
    for nid in sorted(expected):
        neuron = _neuron_out(ctx, final, nid)
        actual = neuron.output
        want = expected[nid]
        if want is None:
            if neuron.cur_pot < ZERO:
                return Counterexample(
                    seq, nid, len(seq), None, actual,
                    f"potential {neuron.cur_pot} is negative",
                )
            continue
        if isinstance(want, _Predicate):
            src = dict(subjects).get(nid)
            received = _received(ctx, seq, final, src) if src is not None else ()
            if not want(actual, received):
                return Counterexample(
                    seq, nid, _predicate_time(p, actual), None, actual,
                    f"violates: {want.name}",
                )
            continue
        if actual != want:
            return Counterexample(
                seq, nid, _first_divergence(want, actual), want, actual,
                "output differs from closed form",
            )
    return None


def check_once(p: PropertyId, ctx, inp):
    seq = _normalize(inp, _width(ctx))
    failure = failed_hypothesis(p, ctx) or input_failure(p, seq)
    if failure:
        return Verdict(p, Status.HYPOTHESES_NOT_MET, 0, None, failure)
    cex = _mismatch(p, ctx, seq, _simulate(ctx, seq))
    if cex is not None:
        return Verdict(p, Status.FAIL, 1, cex)
    return Verdict(p, Status.PASS, 1)


def replay(verdict: Verdict, ctx):
    """Re-simulate a reported counterexample; True iff it still fails the same way."""
    cex = verdict.counterexample
    if cex is None:
        return False
    final = _simulate(ctx, cex.inputs)
    neuron = _neuron_out(ctx, final, cex.neuron_id)
    if neuron is None or neuron.output != cex.actual:
        return False
    if cex.expected is not None:
        return cex.expected != cex.actual
    return _mismatch(verdict.prop, ctx, cex.inputs, final) is not None


# -- input families ----------------------------------------------------------


def _steps(width):
    return list(itertools.product((False, True), repeat=width))


def _canonical_key(seq):
    chrono = tuple(reversed(seq))
    return (len(seq), chrono)


@dataclass(frozen=True)
class AllSequences:
    """Every sequence with ``min_len <= length <= max_len`` over all sources."""

    max_len: int = 8
    min_len: int = 1

    def sequences(self, width):
        steps = _steps(width)
        for length in range(self.min_len, self.max_len + 1):
            for chrono in itertools.product(steps, repeat=length):
                yield tuple(reversed(chrono))

    def sample(self, width, rng):
        length = rng.randint(self.min_len, self.max_len)
        return tuple(tuple(rng.random() < 0.5 for _ in range(width)) for _ in range(length))


@dataclass(frozen=True)
class AllOnes:
    """All-true inputs on every source, lengths ``0..max_len``."""

    max_len: int = 12

    def sequences(self, width):
        for length in range(self.max_len + 1):
            yield ((True,) * width,) * length

    def sample(self, width, rng):
        return ((True,) * width,) * rng.randint(0, self.max_len)


@dataclass(frozen=True)
class AllZeros:
    max_len: int = 12

    def sequences(self, width):
        for length in range(self.max_len + 1):
            yield ((False,) * width,) * length

    def sample(self, width, rng):
        return ((False,) * width,) * rng.randint(0, self.max_len)


def _single_width(width):
    if width != 1:
        raise ValueError("this input family needs exactly one source")


@dataclass(frozen=True)
class ZerosWithOneAt:
    """``zeros(a) ++ [1] ++ zeros(b)`` (newest first) for ``a, b <= max_split``."""

    max_split: int = 6

    def sequences(self, width):
        _single_width(width)
        for a in range(self.max_split + 1):
            for b in range(self.max_split + 1):
                yield ((False,),) * a + ((True,),) + ((False,),) * b

    def sample(self, width, rng):
        _single_width(width)
        a, b = rng.randint(0, self.max_split), rng.randint(0, self.max_split)
        return ((False,),) * a + ((True,),) + ((False,),) * b


@dataclass(frozen=True)
class ZerosThenTwoOnesThenAny:
    """``inp1 ++ [1;1] ++ zeros(b)`` with ``inp1`` arbitrary, both at most ``max_split`` long."""

    max_split: int = 6

    def sequences(self, width):
        _single_width(width)
        for b in range(self.max_split + 1):
            for a in range(self.max_split + 1):
                for inp1 in itertools.product(((False,), (True,)), repeat=a):
                    yield tuple(inp1) + ((True,), (True,)) + ((False,),) * b

    def sample(self, width, rng):
        _single_width(width)
        a, b = rng.randint(0, self.max_split), rng.randint(0, self.max_split)
        inp1 = tuple((rng.random() < 0.5,) for _ in range(a))
        return inp1 + ((True,), (True,)) + ((False,),) * b


def default_family(p: PropertyId, bound=None):
    """Quantifier shape of ``p`` at its default (or the given) bound."""
    if p is PropertyId.PL_ZEROS:
        return AllZeros(12 if bound is None else bound)
    if p is PropertyId.PL_TWO_ONES:
        return ZerosThenTwoOnesThenAny(6 if bound is None else bound)
    if p is PropertyId.PL_SINGLE_ONE:
        return ZerosWithOneAt(6 if bound is None else bound)
    if p in (PropertyId.NL_CASE1, PropertyId.NL_CASE2, PropertyId.CI_WINNER_TAKES_ALL):
        return AllOnes(12 if bound is None else bound)
    return AllSequences(8 if bound is None else bound)


# -- bounded driver ----------------------------------------------------------


def _check_chunk(p, ctx, indexed):
    """Check ``(index, seq)`` pairs; return ``(count, (key, index, cex) | None)``.

    The returned failure is the one with the smallest canonical key, so any
    partition into chunks merges to the same answer.
    """
    runner = _Runner(ctx)
    subjects = _subjects(p, ctx)
    best = None
    count = 0
    for index, seq in indexed:
        if input_failure(p, seq):
            continue
        count += 1
        cex = _mismatch(p, ctx, seq, runner.final(seq), subjects)
        if cex is not None:
            key = _canonical_key(seq)
            if best is None or key < best[0]:
                best = (key, index, cex)
    return count, best


def _chunks(items, n):
    size = max(1, -(-len(items) // n))
    return [items[i:i + size] for i in range(0, len(items), size)]


def verify_bounded(p: PropertyId, ctx, family=None, mode="exhaustive", count=1000,
                   seed=0, jobs=1):
    """Check ``p`` over every member of ``family`` (or ``count`` seeded draws).

    A failing verdict carries the counterexample that is least in the order
    (length, bits oldest first).  In exhaustive mode ``checked_count`` is the
    number of family members satisfying the input hypotheses; members are
    all checked, so the verdict does not depend on ``jobs``.  Random mode
    derives draw ``i`` from ``(seed, i)`` alone.
    """
    failure = failed_hypothesis(p, ctx)
    if failure:
        return Verdict(p, Status.HYPOTHESES_NOT_MET, 0, None, failure)
    family = family or default_family(p)
    width = _width(ctx)
    if mode == "exhaustive":
        seqs = sorted(family.sequences(width), key=_canonical_key)
    elif mode == "random":
        seqs = [family.sample(width, random.Random(f"{seed}:{i}")) for i in range(count)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    indexed = list(enumerate(seqs))

    if jobs > 1 and len(indexed) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_chunk, itertools.repeat(p), itertools.repeat(ctx),
                                    _chunks(indexed, jobs)))
    else:
        results = [_check_chunk(p, ctx, indexed)]

    checked = sum(r[0] for r in results)
    failures = [r[1] for r in results if r[1] is not None]
    if checked == 0:
        return Verdict(p, Status.HYPOTHESES_NOT_MET, 0, None,
                       "family has no input satisfying the input hypotheses")
    if failures:
        _, _, cex = min(failures, key=lambda f: (f[0], f[1]))
        return Verdict(p, Status.FAIL, checked, cex)
    return Verdict(p, Status.PASS, checked)
