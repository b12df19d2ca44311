from fractions import Fraction

import pytest

import hypmix
from hypmix import cantor


@pytest.fixture
def f2():
    return hypmix.FreeGroup(2)


def test_words(f2):
    assert f2.reduce("abBA") == "1"
    assert f2.multiply(["ab", "Ba"]) == "aa"
    assert f2.inverse("abA") == "aBA"
    assert f2.distance("ab", "aB") == 2
    assert len(f2.ball(3)) == 53
    assert len(f2.sphere(2)) == 12
    core, conj = f2.cyclic_reduce("abbA")
    assert f2.multiply([conj, core, f2.inverse(conj)]) == "abbA"
    with pytest.raises(ValueError):
        f2.reduce("abc")


def test_subgroups(f2):
    parity = hypmix.Subgroup(f2, ["aa", "ab", "bb"])
    assert parity.index == 2
    assert all((w in parity) == (len(w) % 2 == 0) for w in f2.ball(4) if w != "1")
    h = hypmix.Subgroup(f2, ["a"])
    assert h.index is None
    assert h.rank == 1
    assert hypmix.Subgroup.parse(f2, h.serialize()) == h
    assert "aaa" in h and "b" not in h
    assert "bab" not in h and "baB" in h.conjugate("b")


def test_transverse(f2):
    h = hypmix.Subgroup(f2, ["aa", "bb"])
    assert hypmix.power_conjugate_into(h, "a") == (2, "1")
    assert hypmix.power_conjugate_into(hypmix.Subgroup(f2, ["a"]), "b") is None
    assert hypmix.is_transverse(hypmix.Subgroup(f2, ["a"]), "ab")
    r = hypmix.construct_transverse([hypmix.Subgroup(f2, ["a"])], "a")
    assert r["f"] == "ab"
    assert "transverse" in hypmix.transversality_certificate(hypmix.Subgroup(f2, ["a"]), r["f"])


def test_walks_and_mixing(f2):
    path = hypmix.sample_walk(f2, 10, seed=3)
    assert path[0] == "1" and len(path) == 11
    assert path == hypmix.sample_walk(f2, 10, seed=3)
    mean, lo, hi = hypmix.drift(f2, 500, 200, seed=1)
    assert lo <= mean <= hi and abs(mean - 0.5) < 0.05
    h, k = hypmix.Subgroup(f2, ["a"]), hypmix.Subgroup(f2, ["b"])
    e = hypmix.estimate_mixing(h, k, 2, 80, 100, seed=5)
    assert e["trials"] == 100 and 0.9 <= e["p_hat"] <= 1.0
    assert e == hypmix.estimate_mixing(h, k, 2, 80, 100, seed=5, threads=2)
    assert hypmix.free_product_experiment(h, 0, 10, seed=1)["successes"] == 0


def test_cantor():
    assert cantor.order_cones("zx", 1) == ["zxx", "zxy", "zxY", "zxz", "zxZ"]
    assert cantor.xi("zx", "zy", "zxy") == "zyX"
    assert cantor.apply("x", "Xz") == "z"
    assert cantor.claim1("zx")["holds"]
    assert cantor.claim2("xZy")["holds"]
    assert cantor.claim3([("zx", "yz"), ("zy", "Zx")])["holds"]
    assert cantor.hit_probability_exact() == (Fraction(1, 3), Fraction(1))
    (q,) = cantor.estimate_qn("1/8", [0], 50, seed=2)
    assert q["p_hat"] == 0.0


def test_run_config():
    out = hypmix.run_config("[experiment]\nkind = drift\nseed = 2\n[drift]\nn = 50\ntrials = 20\n")
    assert "experiment,params,metric,value,ci_low,ci_high,seed" in out
    assert hypmix.run_config("[experiment]\nkind = walk\n[walk]\nn = 3\n", "json").startswith("[")
    with pytest.raises(hypmix.ConfigError):
        hypmix.run_config("[experiment]\nkind = drift\n[drift]\nn = -1\n")
