import pytest

import autoseq


def test_series_and_reversion():
    d = autoseq.Series(2, autoseq.prefix("d", 64))
    u = autoseq.reversion(d)
    x = autoseq.Series(2, [0, 1] + [0] * 62)
    assert autoseq.compose(d, u) == x
    assert autoseq.compose(u, d) == x
    assert u.coeffs[:8] == [0, 1, 0, 0, 0, 1, 0, 1]
    assert len(u) == 64 and u.p == 2
    assert d * d == d.frobenius(1)
    with pytest.raises(ValueError):
        autoseq.reversion(autoseq.Series(2, [1, 1]))


def test_relation_search():
    u = autoseq.Series(2, autoseq.prefix("u", 512))
    rel = autoseq.relation_search(u, 2, 3)
    assert rel is not None and rel["p"] == 2
    assert autoseq.relation_search(autoseq.Series(2, [0, 1] + [0, 1, 1, 0] * 16), 0, 0) is None


def test_catalog():
    assert "delta" in autoseq.sequence_names()
    assert autoseq.prefix("a", 4) == [1, 5, 7, 13]
    assert autoseq.term("F", 10) == 89
    assert autoseq.bfile("F", 2) == "0 1\n1 1\n"
    report = autoseq.cross_check("z", 500)
    assert report["pass"] and report["mismatch"] is None
    with pytest.raises(ValueError):
        autoseq.prefix("nosuch", 3)


def test_automata():
    pd = autoseq.dfao("d")
    assert [autoseq.dfao_eval(pd, n) for n in range(8)] == autoseq.prefix("d", 8)
    assert len(autoseq.minimize(autoseq.dfao("u"))["states"]) == 5
    assert autoseq.dfao_dot(pd).startswith("digraph")
    x = autoseq.dfao("x")
    assert [autoseq.dfao_eval(x, n, "zeckendorf") for n in range(9)] == autoseq.prefix("x", 9)
    assert autoseq.count_lengths("LF", 5) == ["1", "1", "1", "2", "3", "5"]
    assert autoseq.rep("zeckendorf", 12) == "10101"


def test_kernel():
    report = autoseq.kernel_report("u", depth=6, horizon=128)
    assert report["closed"]
    synth = autoseq.synthesize_dfao(autoseq.prefix("u", 1 << 16), depth=6, horizon=128)
    assert len(autoseq.minimize(synth)["states"]) == 5
    assert [autoseq.dfao_eval(synth, n) for n in range(100)] == autoseq.prefix("u", 100)


def test_morphisms():
    assert autoseq.fixed_point("seed 1\n1 -> 1 2 1\n2 -> 1 2 2 2 1\n", 8) == list("12112221")
    value, exact = autoseq.pf_eigenvalue([[2, 2], [1, 3]])
    assert exact == "4" and abs(value - 4) < 1e-12


def test_checks():
    ids = autoseq.check_ids()
    assert len(ids) == 14
    report = autoseq.run_checks(["complexity", "eigenvalues"], {"complexity": 12, "eigenvalues": 0}, jobs=2)
    assert [c["status"] for c in report["checks"]] == ["pass", "skipped"]
    assert report["summary"] == {"pass": 1, "fail": 0, "skipped": 1}
