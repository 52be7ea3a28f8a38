"""scikit-learn adapters.

:class:`GeneratingGraphTransformer` turns groups into generating-graph
feature rows (or adjacency matrices); :class:`ForbiddenSubgraphClassifier`
labels graphs or groups by a forbidden-induced-subgraph property.  Both are
stateless rules, so ``fit`` only validates input and records metadata.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .gamma import GeneratingGraph, gamma_perfect_verdict
from .graphs.perfect import perfect_verdict
from .graphs.recognition import is_c4_free, is_chordal, is_cograph, is_split
from .report import PROPERTIES, parse_hole_limit
from .validation import as_sample_list, sample_to_graph

__all__ = ["GeneratingGraphTransformer", "ForbiddenSubgraphClassifier", "FEATURE_NAMES"]

FEATURE_NAMES = ("vertices", "edges", "isolated", "density", "min_degree", "max_degree",
                 "connected_non_isolated")


def _features(g) -> list[float]:
    n = g.n
    degs = g.degrees()
    iso = set(g.isolated())
    keep = [v for v in range(n) if v not in iso]
    core = g.induced(keep)
    m = g.number_of_edges()
    density = 2 * m / (n * (n - 1)) if n > 1 else 0.0
    return [n, m, len(iso), density, min(degs, default=0), max(degs, default=0),
            float(core.n > 0 and core.is_connected())]


class GeneratingGraphTransformer(TransformerMixin, BaseEstimator):
    """Map group specs to generating-graph features.

    Parameters
    ----------
    output : {"features", "adjacency"}
        ``"features"`` gives an ``(n_samples, 7)`` float array (see
        :data:`FEATURE_NAMES`); ``"adjacency"`` a list of boolean matrices,
        which may differ in size.
    """

    def __init__(self, output: str = "features"):
        self.output = output

    def fit(self, X, y=None):
        if self.output not in ("features", "adjacency"):
            raise ValueError(f"output must be 'features' or 'adjacency', got {self.output!r}")
        samples = as_sample_list(X)
        if y is not None and len(y) != len(samples):
            raise ValueError("X and y have different lengths")
        self.n_features_in_ = 1
        self.fitted_ = True
        return self

    def transform(self, X):
        check_is_fitted(self, "fitted_")
        graphs = [sample_to_graph(s)[0] for s in as_sample_list(X)]
        if self.output == "adjacency":
            return [self._adjacency(g) for g in graphs]
        return np.array([_features(g) for g in graphs], dtype=float)

    @staticmethod
    def _adjacency(g) -> np.ndarray:
        a = np.zeros((g.n, g.n), dtype=bool)
        for u, v in g.edges():
            a[u, v] = a[v, u] = True
        return a

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "fitted_")
        return np.array(FEATURE_NAMES, dtype=object)


class ForbiddenSubgraphClassifier(ClassifierMixin, BaseEstimator):
    """Predict whether each graph (or generating graph of a group) has ``property``.

    ``hole_limit`` applies to ``property="perfect"`` and takes the same
    values as the command line flag (odd integer, ``"full"``, ``None``).
    A bounded search that finds no odd hole or antihole predicts ``True``;
    ``verdicts_`` keeps the full verdict objects (with their search bound)
    and ``certificates_`` the certificate of each, after :meth:`predict`.
    """

    def __init__(self, property: str = "perfect", hole_limit=15):
        self.property = property
        self.hole_limit = hole_limit

    def _check_params(self):
        if self.property not in PROPERTIES:
            raise ValueError(f"property must be one of {PROPERTIES}, got {self.property!r}")
        limit = parse_hole_limit(self.hole_limit)
        if limit == "auto":
            raise ValueError("hole_limit 'auto' is a command line convenience; pass an integer or 'full'")
        return limit

    def fit(self, X, y=None):
        self._check_params()
        samples = as_sample_list(X)
        if y is not None:
            y = np.asarray(y)
            if len(y) != len(samples):
                raise ValueError("X and y have different lengths")
        self.classes_ = np.array([False, True])
        self.n_features_in_ = 1
        return self

    def _decide(self, sample):
        g, _ = sample_to_graph(sample)
        p = self.property
        if p == "perfect":
            limit = self._check_params()
            if isinstance(g, GeneratingGraph):
                v, _ = gamma_perfect_verdict(g.group, g, limit)
            else:
                v, _ = perfect_verdict(g, limit)
            return v.witness is None, v.witness, v
        fn = {"cograph": is_cograph, "chordal": is_chordal, "split": is_split,
              "c4free": is_c4_free}[p]
        v = fn(g)
        return bool(v.value), v.certificate, v

    def predict(self, X):
        check_is_fitted(self, "classes_")
        decided = [self._decide(s) for s in as_sample_list(X)]
        self.certificates_ = [c for _, c, _ in decided]
        self.verdicts_ = [v for _, _, v in decided]
        return np.array([d[0] for d in decided], dtype=bool)
