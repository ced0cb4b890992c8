import json

import pytest

import khoxotic as kx

TREFOIL = "X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n"


def test_unknot_and_trefoil():
    assert kx.homology("O[1]") == [
        {"i": 0, "j": -1, "rank": 1, "torsion": []},
        {"i": 0, "j": 1, "rank": 1, "torsion": []},
    ]
    groups = kx.homology(kx.braid_pd(2, [1, 1, 1]))
    assert {"i": 3, "j": 7, "rank": 0, "torsion": [2]} in groups


def test_euler_is_jones():
    pd = kx.pretzel_pd([-2, 3, 5])
    chi = {}
    for g in kx.homology(pd):
        chi[g["j"]] = chi.get(g["j"], 0) + (-1) ** g["i"] * g["rank"]
    chi = {j: c for j, c in chi.items() if c}
    assert chi == kx.jones(pd)


def test_pd_helpers():
    assert kx.crossings(TREFOIL) == 3
    assert kx.components(kx.torus_link_pd(1, 1)) == 2
    assert kx.crossings(kx.mirror_pd(TREFOIL)) == 3
    assert len(kx.snappy_pd(TREFOIL)) == 3
    assert all(len(x) == 4 for x in kx.snappy_pd(TREFOIL))
    with pytest.raises(ValueError):
        kx.normalize_pd("X[1,2")


def test_window():
    assert kx.homology(kx.braid_pd(2, [1, 1, 1]), "i=0:0") == [
        {"i": 0, "j": 1, "rank": 1, "torsion": []},
        {"i": 0, "j": 3, "rank": 1, "torsion": []},
    ]


def test_verify_hs_distinguishes(tmp_path):
    r = kx.verify_hs(1, cache_dir=str(tmp_path))
    assert r["verdict"] == "distinct-with-witness"
    assert r["exit_code"] == 0
    assert r["results"]["verdict"]["values"] == [1, 0]
    same = kx.verify_hs(1, self_test=True)
    assert same["verdict"] == "not-distinguished"
    assert same["exit_code"] == 1


def test_theorem1_and_torus(tmp_path):
    r = kx.theorem1(1, cache_dir=str(tmp_path))
    assert r["results"]["blowdown_agrees"] is True
    t = kx.torus_table(2)
    assert [(row["p"], row["q"]) for row in t["results"]["rows"]] == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert all(row["ok"] for row in t["results"]["rows"])
    with pytest.raises(kx.InfeasibleError):
        kx.torus_table(6)
    assert [kx.two_saddle_value(p, q) in (1, -1) for p, q in [(1, 0), (0, 1), (1, 1)]] == [True] * 3


def test_reports_are_deterministic(tmp_path):
    a = kx.verify_hs(1, cache_dir=str(tmp_path / "a"))
    b = kx.verify_hs(1, cache_dir=str(tmp_path / "b"))
    assert json.dumps(a) == json.dumps(b)
