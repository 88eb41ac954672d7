import re

from eacap.cli import cmd_verify
from eacap.verify import run_verification


def test_all_groups_pass():
    results = run_verification()
    assert {r.name for r in results} == {
        "path equivalence",
        "partial symmetry",
        "axial symmetry",
        "concavity chords",
        "exchange matrix",
        "kraus completeness",
        "eigensolver agreement",
        "endpoints",
        "reference rows",
    }
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_loose_eigensolver_breaks_path_equivalence():
    status, report = cmd_verify(eig_tol=1e-2)
    assert status == 1
    assert re.search(r"^\[FAIL\] path equivalence", report, re.M)


def test_summary_reports_reference_error():
    status, report = cmd_verify()
    assert status == 0
    m = re.search(r"max \|C - C_table\| ([0-9.e+-]+)", report)
    assert m and float(m.group(1)) <= 1e-6
