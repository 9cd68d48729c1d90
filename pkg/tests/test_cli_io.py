import io
import json

import pytest

from cli_io import StructureFile, algebra_records, export_algebra, load, load_cocycle, load_group, run
from group_twisted_double import FiniteGroup, ThreeCocycle, verify_cocycle
from quasi_hopf import verify_quasi_hopf, verify_quasitriangular
from utils.errors import SpecFileError


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stream=out)
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


def _write(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_load_bundled_group_and_cocycle():
    G = load_group("z2_group")
    assert isinstance(G, FiniteGroup)
    assert G.order == 2
    w = load_cocycle("z2_omega_nontrivial")
    assert isinstance(w, ThreeCocycle)
    assert verify_cocycle(w.group, w).passed


def test_load_permutation_group_and_standard_family():
    G = load_group("s3_group")
    assert G.order == 6
    assert G.labels[3] == "(123)"
    w = load_cocycle("z4_omega_standard")
    assert verify_cocycle(w.group, w).passed


def test_broken_table_names_the_triple(tmp_path):
    path = _write(tmp_path / "broken.json",
                  {"kind": "group", "name": "broken", "table": [[0, 1, 2], [1, 0, 0], [2, 2, 0]]})
    with pytest.raises(SpecFileError, match="not associative at"):
        load(path)


def test_unnormalized_cocycle_is_rejected(tmp_path):
    _write(tmp_path / "g.json", {"kind": "group", "cyclic": 2})
    path = _write(tmp_path / "w.json", {"kind": "cocycle", "group": "g", "values": [[0, 1, 1, -1.0, 0.0]]})
    with pytest.raises(SpecFileError, match="not normalized"):
        load(path)


def test_malformed_files(tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{", encoding="utf-8")
    with pytest.raises(SpecFileError, match="invalid JSON"):
        load(str(bad_json))
    path = _write(tmp_path / "kind.json", {"kind": "matrix"})
    with pytest.raises(SpecFileError, match="unknown kind"):
        load(path)
    path = _write(tmp_path / "range.json", {
        "kind": "structure", "dimension": 1,
        "structure_constants": [[0, 0, 3, 1.0]], "unit": [[0, 1.0]],
        "coproduct": [[0, 0, 0, 1.0]], "counit": [[0, 1.0]],
    })
    with pytest.raises(SpecFileError, match="out of range"):
        load(path)


def test_explicit_and_built_group_algebra_agree(cz2):
    H = load("cz2")
    assert H.dim == 2
    assert verify_quasi_hopf(H).passed
    assert verify_quasitriangular(H).passed
    assert H.algebra.products == cz2.algebra.products


def test_export_round_trip_reproduces_verdicts(tmp_path, h4):
    path = export_algebra(h4, str(tmp_path / "h4.json"))
    again = load(path)
    before = verify_quasi_hopf(h4)
    after = verify_quasi_hopf(again)
    assert [c.passed for c in before.checks] == [c.passed for c in after.checks]
    assert verify_quasitriangular(again).passed


def test_verify_command():
    code, records = _run("verify", "cz2")
    assert code == 0
    assert records
    assert all(r["verdict"] == "pass" for r in records)
    assert max(r["residual"] for r in records) <= 1e-9
    assert {"check", "anchor", "residual", "tol", "verdict", "detail", "report"} <= set(records[0])


def test_failures_only_and_tol_flags():
    code, records = _run("--failures-only", "verify", "sweedler")
    assert code == 0
    assert records == []
    code, records = _run("--tol", "1e-6", "verify", "fun_z2_omega")
    assert code == 0
    assert records[0]["tol"] == 1e-6


def test_double_command_on_corrupted_phi():
    code, records = _run("double", "corrupted_phi_z2")
    assert code == 1
    failed = {r["check"] for r in records if r["verdict"] == "fail"}
    assert "input/phi/pentagon" in failed
    assert not any(r["check"].startswith("mu/") for r in records)


def test_double_command_is_seeded():
    first = _run("--seed", "7", "double", "cz2")
    second = _run("--seed", "7", "double", "cz2")
    assert first[0] == 0
    assert first == second


def test_twisted_double_command():
    code, records = _run("twisted-double", "z2_group", "z2_omega_nontrivial")
    assert code == 0
    square = next(r for r in records if r["check"] == "twisted-double/square-coefficients")
    assert "d_x: -1" in square["detail"]
    assert any(r["check"] == "sigma/product" for r in records)


def test_twisted_double_stops_on_non_cocycle():
    code, records = _run("twisted-double", "z2_group", "z2_omega_bad")
    assert code == 1
    assert any(r["check"] == "cocycle/identity" and r["verdict"] == "fail" for r in records)
    assert not any(r["check"].startswith("sigma/") for r in records)


def test_monodromy_command():
    code, records = _run("monodromy", "cz2")
    assert code == 0
    names = {r["check"] for r in records}
    assert "monodromy/exchange" in names
    assert "second-level/monodromy/exchange" in names


def test_missing_input_exits_with_two():
    code, records = _run("verify", "no_such_algebra")
    assert code == 2
    assert records == []


def test_export_command(tmp_path):
    target = str(tmp_path / "double.json")
    code, _ = _run("export", "double:cz2", "--output", target)
    assert code == 0
    D = load(target)
    assert D.dim == 4
    assert verify_quasi_hopf(D).passed

    target = str(tmp_path / "twisted.json")
    code, _ = _run("export", "twisted:z2_group:z2_omega_nontrivial", "--output", target)
    assert code == 0
    assert isinstance(load(target), StructureFile)


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 2


def test_export_format_is_recorded(tmp_path, cz2):
    target = str(tmp_path / "cz2.json")
    code, records = _run("export", "cz2", "--format", "sc-json", "--output", target)
    assert code == 0
    assert records[0]["detail"] == target
    with open(target, encoding="utf-8") as f:
        assert json.load(f)["format"] == "sc-json"
    with pytest.raises(ValueError):
        algebra_records(cz2, fmt="csv")
