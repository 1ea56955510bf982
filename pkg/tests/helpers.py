"""Small circuit builders used by several test modules."""

from fractions import Fraction as F

from archlab.circuit import initial_circuit
from archlab.neuron import NeuronFeature

H = F(1, 2)


def circuit(si, *weight_maps, tau=H, leak=H):
    fs = [NeuronFeature(i, ws, leak, tau) for i, ws in enumerate(weight_maps)]
    return initial_circuit(fs, si)


def series(n=3, **kw):
    maps = [{n: 1}] + [{i: 1} for i in range(n - 1)]
    return circuit(1, *maps, **kw)


def parallel(n=3, **kw):
    return circuit(1, {n: 1}, *[{0: 1}] * (n - 1), **kw)


def positive_loop(**kw):
    return circuit(1, {1: 1, 2: 1}, {0: 1}, **kw)


def negative_loop(w01=-1, **kw):
    return circuit(1, {1: w01, 2: 1}, {0: 1}, **kw)


def inhibition(**kw):
    return circuit(2, {2: 1}, {0: -1, 3: 1}, **kw)


def contralateral(**kw):
    return circuit(2, {1: -H, 2: 1}, {0: -1, 3: 1}, **kw)
