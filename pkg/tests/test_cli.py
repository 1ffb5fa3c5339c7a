import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from flagcoh import bwb, cli, cones, counterexample
from flagcoh.roots import Weight

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def payload(out, command):
    rec = json.loads(out)
    assert rec["schema_version"] == "1" and rec["command"] == command
    return rec["payload"]


class TestCohomology:
    def test_counterexample_weight(self, capsys):
        status, out, _ = run(capsys, "cohomology", "--rank", "2", "--weight", "0,-3")
        p = payload(out, "cohomology")
        assert status == 0
        assert (p["degree"], p["highest_weight"], p["dimension"]) == (2, [0, 0], 1)

    def test_vanishing(self, capsys):
        status, out, _ = run(capsys, "cohomology", "--rank", "2", "--weight", "-1,0")
        p = payload(out, "cohomology")
        assert status == 0 and p["verdict"] == "all cohomology vanishes"
        assert p["degree"] is None and p["h"] == [0, 0, 0, 0]

    def test_rank3_structure_sheaf(self, capsys):
        _, out, _ = run(capsys, "cohomology", "--rank", "3", "--weight", "0,0,0")
        p = payload(out, "cohomology")
        assert p["degree"] == 0 and p["dimension"] == 1

    @pytest.mark.parametrize("weight", ["0,x", "1", "1,2,3", "", "0x1,2"])
    def test_parse_failures(self, capsys, weight):
        status, out, err = run(capsys, "cohomology", "--rank", "2", "--weight", weight)
        assert status == 2 and out == "" and "error" in err

    def test_rank_cap_is_usage_error(self, capsys):
        status, _, err = run(capsys, "cohomology", "--rank", "33", "--weight",
                             ",".join(["0"] * 33))
        assert status == 2 and "cap" in err


class TestQample:
    def test_counterexample(self, capsys):
        status, out, _ = run(capsys, "qample", "--rank", "2", "--weight", "2,-1")
        assert status == 0 and payload(out, "qample")["qmin"] == 1

    def test_with_oracle(self, capsys):
        _, out, _ = run(capsys, "qample", "--rank", "2", "--weight", "2,-1", "--oracle",
                        "--oracle-box", "2", "--oracle-mmin", "5", "--oracle-mmax", "9")
        p = payload(out, "qample")
        assert p["oracle"] == {"box": 2, "m_min": 5, "m_max": 9, "qmin": 1}


class TestChambers:
    def test_csv(self, capsys):
        status, out, _ = run(capsys, "chambers", "--rank", "2", "--range", "5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert status == 0
        assert rows[0] == ["a1", "a2", "qmin", "regular", "weyl_length"]
        assert len(rows) - 1 == 121
        by = {(int(r[0]), int(r[1])): r[2:] for r in rows[1:]}
        assert by[(0, 1)] == ["1", "false", ""]
        assert by[(-2, 1)] == ["2", "true", "2"]

    def test_svg(self, capsys):
        status, out, _ = run(capsys, "chambers", "--rank", "2", "--range", "5", "--format", "svg")
        assert status == 0
        root = ET.fromstring(out.split("\n", 1)[1])
        assert root.tag == SVG_NS + "svg"
        pts = root.findall(f".//{SVG_NS}circle")
        assert len(pts) == 121
        fills = {int(c.get("data-qmin")): c.get("fill") for c in pts}
        assert len(set(fills.values())) == len(fills) == 4
        legend = [t.text for t in root.iter(SVG_NS + "text")]
        assert legend[:2] == ["ample (q=0)", "1-ample (q=1)"]

    def test_svg_geometry(self, capsys):
        _, out, _ = run(capsys, "chambers", "--rank", "2", "--range", "1", "--format", "svg")
        root = ET.fromstring(out.split("\n", 1)[1])
        pos = {c.get("data-weight"): (float(c.get("cx")), float(c.get("cy")))
               for c in root.iter(SVG_NS + "circle")}
        ox, oy = pos["0,0"]
        ax, ay = pos["1,0"]
        bx, by = pos["0,1"]
        # fundamental weights sit 60 degrees apart with equal length
        assert ay == pytest.approx(oy)
        assert (bx - ox) == pytest.approx((ax - ox) / 2)
        assert (oy - by) == pytest.approx((ax - ox) * 3 ** 0.5 / 2, abs=1e-2)

    def test_svg_needs_rank_2(self, capsys):
        status, _, err = run(capsys, "chambers", "--rank", "3", "--range", "1", "--format", "svg")
        assert status == 2 and "rank 2" in err

    def test_structured(self, capsys):
        _, out, _ = run(capsys, "chambers", "--rank", "2", "--range", "2")
        p = payload(out, "chambers")
        assert len(p["records"]) == 25
        assert p["records"][0] == {"weight": [-2, -2], "qmin": 3, "regular": True,
                                   "weyl_length": 3}

    def test_unsupported_format(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["chambers", "--rank", "2", "--range", "2", "--format", "png"])
        assert exc.value.code == 2

    def test_bad_range(self, capsys):
        status, _, _ = run(capsys, "chambers", "--rank", "2", "--range", "0")
        assert status == 2


class TestVerifyPaper:
    def test_pass(self, capsys):
        status, out, _ = run(capsys, "verify-paper")
        p = payload(out, "verify-paper")
        assert status == 0 and p["status"] == "PASS" and p["diff"] == {}

    def test_wider_oracle(self, capsys):
        status, out, _ = run(capsys, "verify-paper", "--oracle-box", "4", "--oracle-mmax", "40")
        assert status == 0 and payload(out, "verify-paper")["status"] == "PASS"

    def test_injected_fault(self, capsys, monkeypatch):
        real = bwb.bwb_cohomology

        def broken(lam):
            res = real(lam)
            return bwb.CohomologyResult(res.rank, 1, res.highest_weight, res.dimension)

        monkeypatch.setattr(counterexample.bwb, "bwb_cohomology", broken)
        status, out, _ = run(capsys, "verify-paper")
        p = payload(out, "verify-paper")
        assert status == 1 and p["status"] == "FAIL"
        assert set(p["diff"]) == {"cohomology", "h"}
        assert p["diff"]["cohomology"]["computed"]["degree"] == 1

    def test_injected_oracle_fault(self):
        report = counterexample.check(q_oracle=lambda *a: 2)
        assert not report.passed and set(report.mismatches) == {"qmin_oracle"}

    def test_bad_oracle_window(self, capsys):
        status, _, _ = run(capsys, "verify-paper", "--oracle-mmin", "40", "--oracle-mmax", "30")
        assert status == 2


class TestPn:
    def test_lemma(self, capsys):
        _, out, _ = run(capsys, "pn", "--n", "4", "--d", "-1")
        p = payload(out, "pn")
        assert p["h"] == [0] * 5 and p["qmin"] == 4

    def test_bad_n(self, capsys):
        status, _, _ = run(capsys, "pn", "--n", "0", "--d", "1")
        assert status == 2


class TestLefschetz:
    def test_enriques(self, capsys):
        _, out, _ = run(capsys, "lefschetz", "--n", "5", "--dim", "2", "--betti", "1,0")
        assert payload(out, "lefschetz")["verdict"] == "Ample"

    def test_skew_lines(self, capsys):
        _, out, _ = run(capsys, "lefschetz", "--n", "3", "--dim", "1", "--betti", "2")
        p = payload(out, "lefschetz")
        assert p["verdict"] == "NotAmple" and p["first_failing_degree"] == 0

    def test_example_flag(self, capsys):
        _, out, _ = run(capsys, "lefschetz", "--example", "segre-p1xp2-p5")
        p = payload(out, "lefschetz")
        assert p["verdict"] == "NotAmple" and p["first_failing_degree"] == 2

    @pytest.mark.parametrize("argv", [
        ["--n", "3", "--dim", "1", "--betti", "1,0"],
        ["--n", "3", "--dim", "1"],
        ["--example", "nope"],
        ["--n", "5", "--dim", "2", "--betti", "1,0", "--no-smooth"],
    ])
    def test_rejects(self, capsys, argv):
        status, out, err = run(capsys, "lefschetz", *argv)
        assert status == 2 and out == "" and err


def test_byte_identical(capsys):
    argv = ["chambers", "--rank", "2", "--range", "3", "--format", "svg"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_cli_adds_no_computation(capsys):
    _, out, _ = run(capsys, "chambers", "--rank", "3", "--range", "2")
    recs = payload(out, "chambers")["records"]
    lib = cones.chamber_map(3, 2)
    assert [r["qmin"] for r in recs] == [c.qmin for c in lib]
    assert [r["weyl_length"] for r in recs] == [c.weyl_length for c in lib]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "flagcoh", "qample", "--rank", "2",
                           "--weight", "-1,-1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["qmin"] == 3
    proc = subprocess.run([sys.executable, "-m", "flagcoh", "bogus"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
