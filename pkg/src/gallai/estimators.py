"""scikit-learn style wrappers so the operators and recognizers drop into pipelines.

Nothing is learned: ``fit`` only validates its input and records the
parameters in effect. Inputs are sequences of :class:`~gallai.graph.Graph`
objects or graph6 strings.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .formats import parse_graph6, to_graph6
from .graph import Graph
from .operators import anti_gallai, gallai, line_graph
from .recognition import Route, gallai_forest_direct, is_gallai_forest, is_gallai_tree

_OPERATORS = {"gallai": gallai, "anti-gallai": anti_gallai, "line": line_graph}


def check_graphs(X: Iterable[Graph | str]) -> list[Graph]:
    """Coerce ``X`` into a list of graphs, parsing graph6 strings."""
    if isinstance(X, (str, Graph)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    out = []
    for i, item in enumerate(X):
        if isinstance(item, Graph):
            out.append(item)
        elif isinstance(item, str):
            out.append(parse_graph6(item.strip()))
        else:
            raise TypeError(f"item {i}: expected Graph or graph6 string, got {type(item).__name__}")
    return out


class GallaiTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to its Gallai, anti-Gallai or line graph.

    Parameters
    ----------
    operator : {"gallai", "anti-gallai", "line"}
    output : {"graph", "labeled", "graph6"}
        ``"labeled"`` keeps the source-edge labels (a ``LabeledGraph``).
    """

    def __init__(self, operator: str = "gallai", output: str = "graph") -> None:
        self.operator = operator
        self.output = output

    def fit(self, X, y=None):
        if self.operator not in _OPERATORS:
            raise ValueError(f"unknown operator {self.operator!r}")
        if self.output not in ("graph", "labeled", "graph6"):
            raise ValueError(f"unknown output {self.output!r}")
        self.n_graphs_seen_ = len(check_graphs(X))
        return self

    def transform(self, X):
        check_is_fitted(self, "n_graphs_seen_")
        op = _OPERATORS[self.operator]
        derived = [op(g) for g in check_graphs(X)]
        if self.output == "labeled":
            return derived
        if self.output == "graph6":
            return [to_graph6(d.graph) for d in derived]
        return [d.graph for d in derived]


class GallaiRecognizer(ClassifierMixin, BaseEstimator):
    """Predict whether each graph's Gallai graph is a forest or a tree.

    ``predict`` returns booleans; ``decide`` returns the full verdicts with
    certificates. ``y`` passed to ``fit``/``score`` is the ground truth to
    compare against, for instance answers obtained by another route.
    """

    def __init__(self, question: str = "forest", route: str = "characterization") -> None:
        self.question = question
        self.route = route

    def fit(self, X, y=None):
        if self.question not in ("forest", "tree"):
            raise ValueError(f"unknown question {self.question!r}")
        route = Route(self.route)
        if self.question == "forest" and route is Route.STRUCTURAL:
            raise ValueError("the structural route only answers the tree question")
        check_graphs(X)
        self.classes_ = np.array([False, True])
        return self

    def decide(self, X):
        check_is_fitted(self, "classes_")
        route = Route(self.route)
        verdicts = []
        for g in check_graphs(X):
            if self.question == "tree":
                verdicts.append(is_gallai_tree(g, route))
            elif route is Route.DIRECT:
                verdicts.append(gallai_forest_direct(g))
            else:
                verdicts.append(is_gallai_forest(g))
        return verdicts

    def predict(self, X):
        return np.array([v.answer for v in self.decide(X)], dtype=bool)
