import numpy as np
import pytest
from hypothesis import given, settings
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from gengraph.estimators import FEATURE_NAMES, ForbiddenSubgraphClassifier, GeneratingGraphTransformer
from gengraph.families import GroupSpec
from gengraph.graphs import Graph, verify_certificate
from gengraph.validation import as_sample_list, check_adjacency, check_spec, sample_to_graph

from conftest import graphs
import oracles


class TestTransformer:
    def test_features(self):
        X = ["cyclic:5", "dihedral:4", "product:cyclic:2,cyclic:2"]
        F = GeneratingGraphTransformer().fit(X).transform(X)
        assert F.shape == (3, len(FEATURE_NAMES))
        # C_5 is complete
        assert list(F[0][:3]) == [5, 10, 0] and F[0][3] == 1.0
        # D_4: identity and ρ^2 isolated
        assert F[1][2] == 2
        assert F[2][-1] == 1.0

    def test_adjacency(self):
        A = GeneratingGraphTransformer(output="adjacency").fit_transform(["cyclic:3", "sym:3"])
        assert [a.shape for a in A] == [(3, 3), (6, 6)]
        assert A[0].sum() == 6 and not A[0].diagonal().any()

    def test_feature_names(self):
        t = GeneratingGraphTransformer().fit(["cyclic:3"])
        assert list(t.get_feature_names_out()) == list(FEATURE_NAMES)

    def test_column_input(self):
        X = np.array([["cyclic:4"], ["alt:4"]], dtype=object)
        assert GeneratingGraphTransformer().fit_transform(X).shape == (2, 7)

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            GeneratingGraphTransformer().transform(["cyclic:3"])

    def test_bad_output(self):
        with pytest.raises(ValueError):
            GeneratingGraphTransformer(output="pixels").fit(["cyclic:3"])

    def test_clone_and_params(self):
        t = GeneratingGraphTransformer(output="adjacency")
        c = clone(t)
        assert c.get_params() == {"output": "adjacency"}
        assert c is not t


class TestClassifier:
    def test_perfect_groups(self):
        X = ["sym:4", "alt:5", "dihedral:15", "delta:5"]
        clf = ForbiddenSubgraphClassifier(hole_limit=5).fit(X)
        assert list(clf.predict(X)) == [True, False, True, False]
        assert clf.certificates_[0] is None and len(clf.certificates_[1]) == 5
        assert clf.verdicts_[1].status == "NotPerfect"

    def test_bounded_predict_true_keeps_bound(self):
        clf = ForbiddenSubgraphClassifier(hole_limit=5).fit(["dihedral:15"])
        assert clf.predict(["dihedral:15"])[0]
        assert clf.verdicts_[0].status == "PerfectUpTo"

    @pytest.mark.parametrize("prop,expect", [
        ("cograph", [True, False]), ("split", [True, False]),
        ("chordal", [True, False]), ("c4free", [True, False]),
    ])
    def test_other_properties(self, prop, expect):
        X = ["cyclic:8", "sym:4"]
        clf = ForbiddenSubgraphClassifier(property=prop).fit(X)
        assert list(clf.predict(X)) == expect

    def test_score(self):
        X = ["cyclic:8", "cyclic:30", "dihedral:3"]
        y = [True, False, True]
        assert ForbiddenSubgraphClassifier(property="cograph").fit(X, y).score(X, y) == 1.0

    def test_certificates_verify(self):
        X = ["sym:4", "dihedral:15", "cyclic:30"]
        clf = ForbiddenSubgraphClassifier(property="cograph").fit(X)
        clf.predict(X)
        for s, c in zip(X, clf.certificates_):
            assert verify_certificate(sample_to_graph(s)[0], c)

    def test_classes(self):
        clf = ForbiddenSubgraphClassifier().fit(["cyclic:3"])
        assert list(clf.classes_) == [False, True]

    @pytest.mark.parametrize("kwargs", [{"property": "planar"}, {"hole_limit": 4},
                                        {"hole_limit": "auto"}])
    def test_bad_params(self, kwargs):
        with pytest.raises(ValueError):
            ForbiddenSubgraphClassifier(**kwargs).fit(["cyclic:3"])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            ForbiddenSubgraphClassifier().fit(["cyclic:3"], [True, False])

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            ForbiddenSubgraphClassifier().predict(["cyclic:3"])

    def test_clone(self):
        c = clone(ForbiddenSubgraphClassifier(property="split", hole_limit="full"))
        assert c.get_params() == {"property": "split", "hole_limit": "full"}

    def test_adjacency_stack(self):
        c5 = np.zeros((5, 5), dtype=int)
        for i in range(5):
            c5[i, (i + 1) % 5] = c5[(i + 1) % 5, i] = 1
        k5 = 1 - np.eye(5, dtype=int)
        X = np.stack([c5, k5])
        assert list(ForbiddenSubgraphClassifier(hole_limit="full").fit(X).predict(X)) == [False, True]

    def test_in_pipeline_with_graph_objects(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        pipe = make_pipeline(ForbiddenSubgraphClassifier(property="cograph"))
        assert list(pipe.fit([g]).predict([g])) == [False]


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_classifier_matches_oracle(g):
    e = oracles.edge_set(g)
    X = [g]
    assert ForbiddenSubgraphClassifier(property="split").fit(X).predict(X)[0] == oracles.is_split(g.n, e)
    assert ForbiddenSubgraphClassifier(hole_limit="full").fit(X).predict(X)[0] == oracles.is_perfect(g.n, e)


class TestValidation:
    def test_check_spec(self):
        assert str(check_spec("cyclic:4")) == "cyclic:4"
        spec = GroupSpec.parse("alt:4")
        assert check_spec(spec) is spec
        with pytest.raises(TypeError):
            check_spec(4)

    @pytest.mark.parametrize("bad", [
        np.zeros((2, 3)), np.array([[0, 2], [2, 0]]), np.array([[0, 1], [0, 0]]),
        np.eye(2, dtype=int), np.array([["a", "b"], ["c", "d"]]),
    ])
    def test_check_adjacency_rejects(self, bad):
        with pytest.raises(ValueError):
            check_adjacency(bad)

    def test_check_adjacency_accepts_bool(self):
        g = check_adjacency(np.array([[False, True], [True, False]]))
        assert g.number_of_edges() == 1

    def test_sample_list_errors(self):
        with pytest.raises(ValueError):
            as_sample_list("cyclic:3")
        with pytest.raises(ValueError):
            as_sample_list([])
        with pytest.raises(ValueError):
            as_sample_list(np.array([["a", "b"]], dtype=object))
        with pytest.raises(ValueError):
            as_sample_list(np.zeros(4))

    def test_graph_spec_sample(self):
        g, spec = sample_to_graph("delta:3")
        assert g.n == 8 and spec.is_graph
