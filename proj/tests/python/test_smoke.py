import pytest

import weylflag as wf


def test_permutation_basics():
    assert wf.length("3,1,2") == 2
    assert wf.inverse("3,1,2") == "2,3,1"
    assert wf.compose("2,1,3", "1,3,2") == "2,3,1"
    assert wf.bruhat_leq("1,3,2,4", "4,2,3,1")
    assert not wf.bruhat_leq("4,2,3,1", "1,3,2,4")


def test_good_pairs_and_census():
    assert wf.is_good_pair("1,2,3", "3,2,1")["good"]
    bad = wf.is_good_pair("1,3,2,4", "4,2,3,1")
    assert not bad["good"]
    assert bad["certificate"] is None

    c = wf.census(4, 1)
    assert c["comparable_pairs"] == 213
    assert c["bad_pairs"] == [{"w1": "1,3,2,4", "w2": "4,2,3,1"}]


def test_tangent_dimensions():
    assert wf.schubert_tangent_dim("3,4,1,2", "1,2,3,4") == 5
    assert wf.jacobian_oracle_tangent_dim("3,4,1,2", "1,2,3,4") == 5
    with pytest.raises(wf.DomainError):
        wf.schubert_tangent_dim("1,2,3", "3,2,1")


def test_weights_and_linkage():
    assert wf.dot_action("2,1", "0,0") == "-1,1"
    assert wf.weight_leq("0,1", "1,0")
    res = wf.strongly_linked("-1,2", "1,0")
    assert res["linked"]
    assert res["chain"] == [{"i": 1, "j": 2, "tau": 1}]
    assert not wf.strongly_linked("0,1", "1,0")["linked"]


def test_formula():
    assert wf.dim_xtri(3, 2) == 21
    assert wf.d_invariant("2,3,1") == 2
    rep = wf.main_formula(3, 2, "3,1,2;2,1,3", "1,2,3;1,2,3", "0,1,2;0,2,5")
    assert rep["total"] == 21
    assert rep["d_term"] == 3
    assert rep["schubert_sum"] == 3
    assert not rep["conjectural"]


def test_eigen_and_cells():
    basis = wf.eigen_basis("e^2", [["0", "0"], ["e", "1"]], ["0", "1"])
    assert basis == [["1 + 0*e", "0 + 0*e"], ["0 - 1*e", "1 + 0*e"]]

    flag = [["0", "1", "0"], ["1", "0", "0"], ["e", "0", "1"]]
    members = [w for w in ("1,2,3", "3,1,2", "3,2,1")
               if wf.closed_cell_member("e^2", flag, w)]
    assert members == ["3,1,2", "3,2,1"]
    assert not any(wf.open_cell_member("e^2", flag, w)
                   for w in ("1,2,3", "3,1,2", "3,2,1"))


def test_verify_single_suite():
    results = wf.verify("census")
    assert len(results) == 1
    assert results[0]["pass"]
