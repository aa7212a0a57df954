import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from gallai.estimators import GallaiRecognizer, GallaiTransformer, check_graphs
from gallai.formats import to_graph6
from gallai.graph import Graph, is_forest
from gallai.patterns import CATALOG, F8_MINUS, GEM

GRAPHS = [Graph.path(4), Graph.cycle(4), GEM, CATALOG["F1"], F8_MINUS]


def test_check_graphs():
    assert check_graphs(["Bw", Graph.path(2)]) == [Graph.complete(3), Graph.path(2)]
    with pytest.raises(TypeError):
        check_graphs("Bw")
    with pytest.raises(TypeError):
        check_graphs([3])


def test_params_round_trip():
    t = GallaiTransformer(operator="line")
    assert t.get_params() == {"operator": "line", "output": "graph"}
    t2 = clone(t).set_params(output="graph6")
    assert t2.output == "graph6" and t.output == "graph"
    r = GallaiRecognizer(question="tree", route="structural")
    assert clone(r).get_params() == {"question": "tree", "route": "structural"}


def test_transformer():
    t = GallaiTransformer().fit(GRAPHS)
    out = t.transform(GRAPHS)
    assert out[2].n == 7 and out[0] == Graph.path(3)
    assert GallaiTransformer(output="graph6").fit_transform(["Bw"]) == [to_graph6(Graph.empty(3))]
    labeled = GallaiTransformer(output="labeled").fit_transform(["Bw"])
    assert [tuple(e) for e in labeled[0].labels] == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(NotFittedError):
        GallaiTransformer().transform(GRAPHS)
    with pytest.raises(ValueError):
        GallaiTransformer(operator="nope").fit(GRAPHS)


def test_recognizer_predict_and_score():
    clf = GallaiRecognizer().fit(GRAPHS)
    pred = clf.predict(GRAPHS)
    assert pred.dtype == bool
    assert pred.tolist() == [True, False, True, False, True]
    truth = GallaiTransformer().fit_transform(GRAPHS)
    assert clf.score(GRAPHS, np.array([is_forest(g) for g in truth])) == 1.0
    direct = GallaiRecognizer(route="direct").fit(GRAPHS)
    assert direct.predict(GRAPHS).tolist() == pred.tolist()
    trees = GallaiRecognizer(question="tree", route="structural").fit(GRAPHS)
    assert trees.predict([F8_MINUS, Graph.path(5), GEM]).tolist() == [True, True, False]
    assert trees.decide([GEM])[0].certificate.condition == "gem-cut-vertices"
    with pytest.raises(ValueError):
        GallaiRecognizer(route="structural").fit(GRAPHS)
    with pytest.raises(NotFittedError):
        GallaiRecognizer().predict(GRAPHS)


def test_pipeline_composition():
    pipe = make_pipeline(FunctionTransformer(lambda xs: [x.strip() for x in xs]), GallaiRecognizer())
    pipe.fit(["Bw ", " Ch"])
    assert pipe.predict(["Bw", "Ch"]).tolist() == [True, True]
