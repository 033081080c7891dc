import json
import subprocess
import sys

import pytest

from supergca import build, export_algebra, import_algebra
from supergca.cli import main
from supergca.core import structure_constants, with_constant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_gca_exotic_counts(capsys):
    code, out, _ = run(capsys, "build", "--family", "gca", "--d", "2", "--two-ell", "2",
                       "--central", "exotic")
    assert code == 0 and len(json.loads(out)["generators"]) == 11


def test_build_illegal_spec_names_condition(capsys):
    code, out, err = run(capsys, "build", "--family", "exotic-super", "--d", "3", "--two-ell", "2")
    assert code == 2 and out == "" and "exotic super requires d = 2" in err


def test_build_to_file_then_verify(capsys, tmp_path):
    path = tmp_path / "n1.json"
    assert run(capsys, "build", "--family", "n1", "--d", "1", "--two-ell", "1",
               "--central", "mass", "--out", str(path))[0] == 0
    assert import_algebra(path.read_text()) == build("n1", 1, 1, "mass")
    code, out, _ = run(capsys, "verify", "jacobi", "--in", str(path))
    assert code == 0 and out.strip().endswith("status: pass")


@pytest.mark.parametrize("family,d,L,central", [
    ("gca", 3, 2, "none"), ("standard", 2, 3, "mass"), ("exotic-super", 2, 2, "exotic"),
    ("n1", 2, 1, "mass"),
])
def test_verify_jacobi_on_builtins(capsys, family, d, L, central):
    code, *_ = run(capsys, "verify", "jacobi", "--family", family, "--d", str(d),
                   "--two-ell", str(L), "--central", central)
    assert code == 0


def test_verify_jacobi_on_mutated_document(capsys, tmp_path):
    alg = build("gca", 1, 2)
    key = next(k for k in structure_constants(alg) if k[0].name == "C" and k[1].name == "P")
    a, b, g, c = key
    path = tmp_path / "bad.json"
    path.write_text(export_algebra(with_constant(alg, a, b, g, c + 1)))
    code, out, _ = run(capsys, "verify", "jacobi", "--in", str(path), "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "fail"
    viol = [v for c_ in doc["checks"] for v in c_["violations"]]
    assert any(a.label in v["witnesses"] and b.label in v["witnesses"] for v in viol)


def test_malformed_document_exits_2(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "verify", "jacobi", "--in", str(path))
    assert code == 2 and "malformed" in err
    code, _, err = run(capsys, "verify", "jacobi", "--in", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_missing_spec_flags_exit_2(capsys):
    code, _, err = run(capsys, "verify", "jacobi", "--family", "gca")
    assert code == 2 and "--d" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("check", ["grading", "closure"])
def test_grading_and_closure(capsys, check):
    code, out, _ = run(capsys, "verify", check, "--family", "standard", "--d", "2",
                       "--two-ell", "3", "--central", "mass")
    assert code == 0 and "fail" not in out


def test_verify_realization(capsys):
    code, *_ = run(capsys, "verify", "realization", "--family", "standard", "--central", "mass",
                   "--two-ell", "3", "--d", "2")
    assert code == 0


def test_realization_of_unsupported_case(capsys):
    code, _, err = run(capsys, "verify", "realization", "--family", "gca", "--d", "1",
                       "--two-ell", "1", "--central", "mass")
    assert code == 2 and "no realization" in err


def test_oscillator_basis_reports_sign(capsys):
    args = ["verify", "oscillator-basis", "--family", "standard", "--central", "mass",
            "--two-ell", "3", "--d", "1", "--format", "json"]
    code, out, _ = run(capsys, *args)
    aa = next(c for c in json.loads(out)["checks"] if c["name"] == "aa+")
    assert code == 0 and aa["fermion_sign"] == -1
    code, out, _ = run(capsys, *args, "--flip-fermion-sign")
    aa = next(c for c in json.loads(out)["checks"] if c["name"] == "aa+")
    assert code == 0 and aa["fermion_sign"] == 1


def test_oscillator_basis_needs_mass(capsys):
    code, _, err = run(capsys, "verify", "oscillator-basis", "--family", "standard",
                       "--d", "2", "--two-ell", "2", "--central", "exotic")
    assert code == 2 and "mass" in err


def test_hamiltonian_verdicts(capsys):
    base = ["verify", "hamiltonian", "--family", "standard", "--central", "mass", "--d", "1"]
    assert run(capsys, *base, "--two-ell", "1")[0] == 0
    code, out, _ = run(capsys, *base, "--two-ell", "3")
    assert code == 1 and "hamiltonian: fail" in out


@pytest.mark.parametrize("L", [1, 2, 4])
def test_appendix(capsys, L):
    code, out, _ = run(capsys, "appendix", "--two-ell", str(L))
    assert code == 0 and "verdict: trivial" in out
    code, out, _ = run(capsys, "appendix", "--two-ell", str(L), "--format", "json")
    check = json.loads(out)["checks"][0]
    assert check["verdict"] == "trivial" and check["nullity"] == len(check["shifts"])


def test_appendix_lowest_level_has_no_special_index(capsys):
    out = run(capsys, "appendix", "--two-ell", "1", "--format", "json")[1]
    shifts = json.loads(out)["checks"][0]["shifts"]
    assert all(s["method"] == "p-shift" for s in shifts)


def test_export_round_trip(capsys, tmp_path):
    first = tmp_path / "a.json"
    run(capsys, "export", "--family", "exotic-super", "--d", "2", "--two-ell", "3",
        "--central", "mass", "--out", str(first))
    code, out, _ = run(capsys, "export", "--in", str(first))
    assert code == 0 and out == first.read_text()


def test_reports_are_byte_identical_and_untimed(capsys, monkeypatch):
    args = ["verify", "jacobi", "--family", "standard", "--d", "2", "--two-ell", "2",
            "--format", "json"]
    a = run(capsys, *args)[1]
    monkeypatch.setenv("SUPERGCA_MAX_WORKERS", "4")
    b = run(capsys, *args)[1]
    assert a == b and "timing" not in json.loads(a)
    timed = json.loads(run(capsys, *args, "--timing")[1])
    assert "seconds" in timed["timing"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supergca", "appendix", "--two-ell", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "trivial" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "supergca", "build", "--family", "gca",
                           "--d", "1", "--two-ell", "2", "--central", "mass"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "2l odd" in proc.stderr
