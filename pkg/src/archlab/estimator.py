"""scikit-learn style wrapper around circuit simulation."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .circuit import NeuroCircuit, is_initial_circuit, simulate


class CircuitTransformer(BaseEstimator, TransformerMixin):
    """Run a circuit over a chronological 0/1 input matrix.

    ``X`` has one row per time step and one column per external source.
    ``transform`` returns one row per step and one column per neuron (ordered
    by id): outputs as ints, or exact potentials as an object array when
    ``output="potential"``.  Every call starts from the fitted circuit state.
    """

    def __init__(self, circuit=None, output="spikes"):
        self.circuit = circuit
        self.output = output

    def fit(self, X=None, y=None):
        if not isinstance(self.circuit, NeuroCircuit):
            raise TypeError("circuit must be a NeuroCircuit")
        if self.output not in ("spikes", "potential"):
            raise ValueError(f"output must be 'spikes' or 'potential', got {self.output!r}")
        self.circuit_ = self.circuit
        self.n_features_in_ = self.circuit.suppl_input
        self.is_initial_ = is_initial_circuit(self.circuit)
        return self

    def transform(self, X):
        check_is_fitted(self, "circuit_")
        X = check_array(X, dtype=None, ensure_min_samples=0)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} columns, expected {self.n_features_in_}")
        if not np.isin(X, (0, 1)).all():
            raise ValueError("X must contain only 0 and 1")
        c = self.circuit_
        lo = len(c.neurons)
        inps = [{lo + j: bool(v) for j, v in enumerate(row)} for row in X][::-1]
        trace = simulate(c, inps)[1:]
        if self.output == "potential":
            out = np.empty((len(trace), lo), dtype=object)
            for k, r in enumerate(trace):
                out[k, :] = r.potentials
            return out
        return np.array([[int(b) for b in r.outputs] for r in trace], dtype=int).reshape(-1, lo)
