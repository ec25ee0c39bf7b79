import json
import os
import subprocess

import pytest

import fcensus


def test_census_matches_exact_law():
    r = fcensus.census(2, 2, 2)
    assert r["schema_version"] == "1"
    assert r["counts"]["X"] == "88"
    assert int(r["counts"]["X"]) == fcensus.exact_X_n2(2, 4)
    assert fcensus.census(2, 2, 2, workers=4) == r


def test_strata_sum_to_diagonalizable_count():
    r = fcensus.census(2, 2, 3, strata=True)
    assert sum(int(s["count"]) for s in r["strata_by_quiver"]) == int(r["counts"]["X_diag"])
    assert sum(int(s["count_X"]) for s in r["strata_by_shape"]) == int(r["counts"]["X"])


def test_formulas_and_tables():
    assert fcensus.c_inf(2, 3) == 183
    assert fcensus.leading_term("X_diag", 2, 2) == (4, 2)
    assert fcensus.gaussian_binomial(4, 2, 2) == 35
    dim, classes = fcensus.optimal_shapes(6)
    assert dim == 10 and classes == [[[3, 3]]]
    dim, classes = fcensus.quiver_maximizers(3)
    assert len(classes) >= 1
    assert fcensus.commutative_subalgebra_count(2, 3, 3) == 183
    assert fcensus.diag_subalgebra_count(2, 3) == 64


def test_matrix_predicates():
    assert fcensus.in_X(2, 1, [[0, 1], [0, 0]])
    assert fcensus.jordan_shape(2, 1, [[0, 1], [0, 0]]) == [[1, 1]]
    # Over F_4 with generator g (code 2): M sigma(M) = diag(g^2, g) but
    # sigma(M) M = diag(g, g^2).
    assert not fcensus.in_X(2, 2, [[0, 1], [2, 0]])
    assert fcensus.in_X(2, 2, [[2, 0], [0, 2]])


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        fcensus.census(4, 1, 2)
    with pytest.raises(fcensus.FcensusError):
        fcensus.census(2, 3, 3, work_cap=10)
    with pytest.raises(ValueError):
        fcensus.leading_term("X_bogus", 2, 2)


def test_acceptance_check_from_python():
    assert len(fcensus.acceptance_check_ids()) == 12
    out = fcensus.run_check("shape-maximizers")
    assert out["status"] == "pass"


@pytest.mark.skipif("FCENSUS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_output_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.environ["FCENSUS_SCHEMA"]) as fh:
        schema = json.load(fh)
    for args in (["--p", "2", "--e", "2", "--n", "2"], ["--p", "3", "--e", "1", "--n", "2", "--strata"]):
        out = subprocess.run([os.environ["FCENSUS_CLI"], "census", *args], check=True, capture_output=True, text=True)
        report = json.loads(out.stdout)
        jsonschema.validate(report, schema)
        assert report == fcensus.census(*[int(a) for a in args[1:6:2]], strata="--strata" in args)
