import pivlab


def test_hermite_coefficients():
    assert pivlab.hermite(0) == ["1"]
    assert pivlab.hermite(2) == ["-2", "0", "4"]
    assert pivlab.hermite_wronskian([1, 2]) == ["4", "0", "8"]


def test_ratfunc_parsing():
    f = pivlab.ratfunc("-1/z")
    assert f["num"] == ["-1"]
    assert f["den"] == ["0", "1"]


def test_stieltjes_verification():
    report = pivlab.verify_stieltjes_hermite(6)
    assert report["verdict"] == "pass"
    assert report["precision_bits"] == 256
    assert len(report["residuals"]) == 6


def test_generalized_and_monodromy_agree_on_a_seed_function():
    f = "3/z - z"
    gs = pivlab.generalized_stieltjes(f)
    mono = pivlab.trivial_monodromy("12/z^2 + z^2 - 7")
    assert gs["verdict"] == "pass"
    assert mono["verdict"] == "pass"
    assert mono["poles"][0]["m"] == 3


def test_theorem1_pass_and_fail():
    assert pivlab.theorem1("-1/z")["verdict"] == "pass"
    assert pivlab.theorem1("-1/z + 1")["verdict"] == "fail"


def test_chain_pipeline():
    out = pivlab.build_chain("[]<[1]")
    chain = out["chain"]
    assert chain["N"] == 3
    assert pivlab.verify_chain(chain)["verdict"] == "pass"
    piv = out["piv"]
    assert piv["a"] == "-2"
    assert piv["b"] == "-2"
    assert piv["w"] == {"num": ["-1"], "den": ["0", "1"]}
    assert pivlab.verify_piv("-1/z", piv["a"], piv["b"])
    assert pivlab.solve_piv_params("-1/z") == ("-2", "-2")
    assert pivlab.solve_piv_params("z") is None
    assert pivlab.pole_expansion("-1/z")["verdict"] == "pass"


def test_residue_cycles():
    cycles = pivlab.residue_cycles(3)
    values = sorted(tuple(c["values"]) for c in cycles)
    assert len(values) == 2
    assert (0, 0, 0) in values


def test_equilibrium_search():
    runs = pivlab.solve_equilibrium("stieltjes", 2, starts=4, seed=3)
    assert any(r["converged"] for r in runs)
