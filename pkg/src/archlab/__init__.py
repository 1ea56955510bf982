"""Exact simulation and bounded verification of Boolean LI&F neuron circuits."""

from .archetypes import ArchetypeClass, classify
from .circuit import NeuroCircuit, initial_circuit, make_circuit, n_steps, next_step, simulate
from .circuitfile import parse_circuit, parse_input_string, serialize_circuit
from .errors import (
    ArchlabError,
    BadArity,
    BadChar,
    CircuitSyntaxError,
    ConstraintError,
    HypothesesNotMet,
    SchemaError,
)
from .neuron import Neuron, NeuronFeature, after_n_steps, next_neuron, set_neuron
from .numeric import Rational, rat, rat_format, rat_parse
from .properties import NeuronContext, PropertyId, Status, Verdict, check_once, verify_bounded

__version__ = "0.1.0"

__all__ = [
    "ArchetypeClass",
    "ArchlabError",
    "BadArity",
    "BadChar",
    "CircuitSyntaxError",
    "ConstraintError",
    "HypothesesNotMet",
    "Neuron",
    "NeuronContext",
    "NeuronFeature",
    "NeuroCircuit",
    "PropertyId",
    "Rational",
    "SchemaError",
    "Status",
    "Verdict",
    "after_n_steps",
    "check_once",
    "classify",
    "initial_circuit",
    "make_circuit",
    "n_steps",
    "next_neuron",
    "next_step",
    "parse_circuit",
    "parse_input_string",
    "rat",
    "rat_format",
    "rat_parse",
    "serialize_circuit",
    "set_neuron",
    "simulate",
    "verify_bounded",
]
