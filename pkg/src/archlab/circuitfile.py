"""Circuit documents and external-input strings.

A circuit document is JSON::

    {"suppl_input": 1,
     "neurons": [{"id": 0, "tau": "1/2", "leak": "1/2", "weights": {"1": "1"}}]}

Rationals are always strings.  Input strings are chronological (first step
first); everything returned from here is reverse-chronological.
"""

import json
import re

from .circuit import NeuroCircuit, initial_circuit
from .errors import (
    BadArity,
    BadChar,
    CircuitSyntaxError,
    ConstraintError,
    SchemaError,
)
from .neuron import NeuronFeature
from .numeric import rat_format, rat_parse

__all__ = [
    "parse_circuit",
    "load_circuit",
    "serialize_circuit",
    "parse_input_string",
    "format_input_string",
]

_TOP_KEYS = {"suppl_input", "neurons"}
_NEURON_KEYS = {"id", "tau", "leak", "weights"}
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


def _natural(value, where):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{where} must be a natural number, got {value!r}")
    return value


def _rational(value, where):
    if not isinstance(value, str):
        raise SchemaError(f"{where} must be rational text, got {value!r}")
    try:
        return rat_parse(value)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object")
    missing = allowed - obj.keys()
    if missing:
        raise SchemaError(f"{where} is missing {', '.join(sorted(missing))}")
    extra = obj.keys() - allowed
    if extra:
        raise SchemaError(f"{where} has unknown field {', '.join(sorted(extra))}")


def _decode(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CircuitSyntaxError(f"not UTF-8 at byte {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    except RecursionError:
        raise CircuitSyntaxError("document nested too deeply") from None
    except ValueError as exc:  # integer literals past the digit limit
        raise CircuitSyntaxError(str(exc)) from None


def parse_circuit(text) -> NeuroCircuit:
    """Build the initial circuit described by ``text`` (str or bytes)."""
    doc = _decode(text)
    _keys(doc, _TOP_KEYS, "document")
    si = _natural(doc["suppl_input"], "suppl_input")
    records = doc["neurons"]
    if not isinstance(records, list):
        raise SchemaError("neurons must be an array")
    env_len = len(records) + si
    features = []
    for k, rec in enumerate(records):
        where = f"neurons[{k}]"
        _keys(rec, _NEURON_KEYS, where)
        nid = _natural(rec["id"], f"{where}.id")
        tau = _rational(rec["tau"], f"{where}.tau")
        leak = _rational(rec["leak"], f"{where}.leak")
        if not isinstance(rec["weights"], dict):
            raise SchemaError(f"{where}.weights must be an object")
        weights = {}
        for key, raw in rec["weights"].items():
            if not _DECIMAL.fullmatch(key):
                raise SchemaError(f"{where}.weights key {key!r} is not a decimal id")
            source = int(key)
            w = _rational(raw, f"{where}.weights[{key}]")
            if source >= env_len:
                raise ConstraintError(
                    "IdInfLen",
                    f"weight {nid}→{source} names an id outside the environment of size {env_len}",
                )
            weights[source] = w
        features.append(NeuronFeature(nid, weights, leak, tau))
    return initial_circuit(features, si)


def load_circuit(path):
    with open(path, "rb") as fh:
        return parse_circuit(fh.read())


def serialize_circuit(c: NeuroCircuit) -> str:
    """Canonical document: neurons by id, ascending weight keys, zeros omitted."""
    neurons = []
    for n in sorted(c.neurons, key=lambda n: n.id):
        f = n.feature
        neurons.append({
            "id": f.id,
            "tau": rat_format(f.tau),
            "leak": rat_format(f.leak_factor),
            "weights": {str(k): rat_format(w) for k, w in sorted(f.weights.items()) if w != 0},
        })
    doc = {"suppl_input": c.suppl_input, "neurons": neurons}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_input_string(text, suppl_input, first_id=0):
    """Chronological bit string to reverse-chronological input maps.

    Step bits are ordered by external id; bit ``j`` of a step drives id
    ``first_id + j`` (pass the neuron count of the circuit).
    """
    text = text.strip()
    if not text:
        return []
    if ";" in text or suppl_input != 1:
        steps = text.split(";")
    else:
        steps = list(text)
    out = []
    for k, step in enumerate(steps):
        step = step.strip()
        bad = [ch for ch in step if ch not in "01"]
        if bad:
            raise BadChar(f"step {k + 1}: unexpected character {bad[0]!r}")
        if len(step) != suppl_input:
            raise BadArity(f"step {k + 1} has {len(step)} bits, expected {suppl_input}")
        out.append({first_id + j: ch == "1" for j, ch in enumerate(step)})
    out.reverse()
    return out


def format_input_string(inps, suppl_input, first_id=0):
    """Inverse of :func:`parse_input_string`; steps are ``;``-separated unless one bit wide."""
    steps = []
    for inp in reversed(inps):
        steps.append("".join(
            "1" if inp.get(first_id + j, False) else "0" for j in range(suppl_input)
        ))
    return ("" if suppl_input == 1 else ";").join(steps)
