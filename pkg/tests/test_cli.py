import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as Fr

import numpy as np

from weylorbit.cli import main, raster_rows
from weylorbit.orbitfn import available_types, eval_zeta
from weylorbit.rootdata import build_root_system


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_rootinfo(capsys):
    info = run_json(capsys, "rootinfo", "--algebra", "C2")
    assert info["cartan"] == [[2, -1], [-2, 2]]
    assert info["marks"] == [2, 1] and info["dual_marks"] == [1, 2]
    assert info["connection_index"] == 2 and info["weyl_order"] == 8
    assert info["short"] == [1] and info["long"] == [2]
    a1 = run_json(capsys, "rootinfo", "--algebra", "A1")
    assert a1["cartan"] == [[2]] and a1["weyl_order"] == 2 and a1["connection_index"] == 2
    code, out, _ = run(capsys, "rootinfo", "--algebra", "C2", "--format", "text")
    assert code == 0 and "weyl_order: 8" in out
    code, _, err = run(capsys, "rootinfo", "--algebra", "H3")
    assert code == 1 and "error" in err


def test_points_and_labels(capsys):
    doc = run_json(capsys, "points", "--algebra", "C2", "--M", "4", "--type", "Es-")
    assert doc["header"]["kind"] == "points" and doc["header"]["type"] == "Es-"
    assert len(doc["points"]) == 5
    assert all("/" in x for p in doc["points"] for x in p["u"])
    assert sum(p["reflected"] for p in doc["points"]) >= 1
    doc = run_json(capsys, "labels", "--algebra", "C2", "--M", "4", "--type", "E-")
    assert len(doc["labels"]) == 8
    code, out, _ = run(capsys, "labels", "--algebra", "C2", "--M", "4", "--type", "E-", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t1", "t2", "x1", "x2", "h", "reflected"] and len(rows) == 9
    # pair syntax reaches the same type
    same = run_json(capsys, "labels", "--algebra", "C2", "--M", "4", "--type", "(l,e)")
    assert same["labels"] == doc["labels"]
    code, _, err = run(capsys, "points", "--algebra", "A2", "--M", "3", "--type", "Es+")
    assert code == 1 and "two root lengths" in err
    code, _, err = run(capsys, "points", "--algebra", "C2", "--M", "0", "--type", "C")
    assert code == 1


def test_count(capsys):
    r = run_json(capsys, "count", "--algebra", "C2", "--M", "4", "--type", "Es+", "--closed-form")
    assert r["enumerated"] == r["closed_form"] == 13 and r["match"]
    r = run_json(capsys, "count", "--algebra", "C2", "--M", "4", "--type", "Ss", "--closed-form")
    assert r["enumerated"] == 4 and r["closed_form"] is None
    r = run_json(capsys, "count", "--algebra", "F4", "--M", "19", "--type", "Es+", "--closed-form")
    assert r["enumerated"] == r["closed_form"] == 430
    r = run_json(capsys, "count", "--algebra", "A2", "--M", "5", "--type", "E+", "--closed-form")
    assert r["closed_form"] is None and "enumeration" in r["note"]
    code, out, _ = run(capsys, "count", "--algebra", "G2", "--M", "6", "--type", "E+", "--format", "csv")
    assert code == 0 and out.strip().isdigit()


def test_analyze_synthesize_round_trip(capsys, tmp_path):
    doc = run_json(capsys, "points", "--algebra", "G2", "--M", "5", "--type", "El-")
    rng = np.random.default_rng(1)
    vals = [[float(a), float(b)] for a, b in rng.normal(size=(len(doc["points"]), 2))]
    samples = {"header": dict(doc["header"], kind="samples", kernel="complex"),
               "points": [p["u"] for p in doc["points"]], "values": vals}
    src = tmp_path / "s.json"
    src.write_text(json.dumps(samples))
    spectrum = tmp_path / "k.json"
    assert main(["analyze", "--input", str(src), "--output", str(spectrum)]) == 0
    back = tmp_path / "b.json"
    assert main(["synthesize", "--input", str(spectrum), "--output", str(back)]) == 0
    got = json.loads(back.read_text())
    assert got["points"] == samples["points"]
    assert np.allclose(np.array(got["values"]), np.array(vals), atol=1e-10)
    # evaluation at chosen points
    at = samples["points"][0]
    r = run_json(capsys, "synthesize", "--input", str(spectrum), "--at", ",".join(at))
    assert np.allclose(r["values"][0], vals[0], atol=1e-10)
    # header cross-checks
    code, _, err = run(capsys, "analyze", "--input", str(src), "--M", "6")
    assert code == 1 and "M" in err
    code, _, err = run(capsys, "analyze", "--input", str(src), "--type", "(l,s)")
    assert code == 1
    assert main(["analyze", "--input", str(src), "--type", "(s,l)", "--output", str(tmp_path / "x")]) == 0
    # a sample file with a missing point is rejected
    bad = dict(samples, points=samples["points"][1:], values=vals[1:])
    src.write_text(json.dumps(bad))
    code, _, err = run(capsys, "analyze", "--input", str(src))
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "analyze", "--input", str(tmp_path / "missing.json"))
    assert code == 1


def test_hartley_round_trip(capsys, tmp_path):
    doc = run_json(capsys, "points", "--algebra", "C2", "--M", "6", "--type", "S")
    vals = [float(i % 3) - 0.5 for i in range(len(doc["points"]))]
    samples = {"header": dict(doc["header"], kind="samples", kernel="hartley"),
               "points": [p["u"] for p in doc["points"]], "values": vals}
    src, spectrum, back = tmp_path / "s.json", tmp_path / "k.json", tmp_path / "b.json"
    src.write_text(json.dumps(samples))
    assert main(["analyze", "--input", str(src), "--output", str(spectrum)]) == 0
    k = json.loads(spectrum.read_text())
    assert k["header"]["kernel"] == "hartley" and all(isinstance(c, float) for c in k["coeffs"])
    assert main(["synthesize", "--input", str(spectrum), "--output", str(back)]) == 0
    assert np.allclose(json.loads(back.read_text())["values"], vals, atol=1e-10)


def test_verify(capsys):
    r = run_json(capsys, "verify", "--algebra", "C2", "--M", "4", "--type", "E+")
    assert r["pass"] and r["cardPoints"] == r["cardLabels"] == 10
    r = run_json(capsys, "verify", "--algebra", "G2", "--M", "5", "--type", "Es-", "--kernel", "hartley")
    assert r["pass"] and r["maxDiagRelErr"] <= 1e-12
    code, out, _ = run(capsys, "verify", "--algebra", "C2", "--M", "40", "--type", "C", "--budget", "1000")
    assert code == 1 and json.loads(out)["error"] == "budget exceeded"


def test_raster(capsys):
    code, out, _ = run(capsys, "raster", "--algebra", "C2", "--type", "Es-", "--label", "1,1",
                       "--resolution", "9")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 81
    assert list(rows[0]) == ["u1", "u2", "x", "y", "value", "inside", "boundary"]
    assert any(r["boundary"] == "1" for r in rows)
    d = build_root_system("C2")
    for r in rows:
        u = (Fr(r["u1"]), Fr(r["u2"]))
        ref = eval_zeta(d, "Es-", (1, 1), u)
        assert abs(float(r["value"]) - ref) <= 1e-12
        if r["boundary"] == "1":
            assert abs(float(r["value"])) <= 1e-12 and r["inside"] == "1"
    code, out, _ = run(capsys, "raster", "--algebra", "G2", "--type", "E-", "--label", "2,1",
                       "--kernel", "complex", "--resolution", "5")
    assert code == 0 and out.splitlines()[0] == "u1,u2,x,y,re,im,inside,boundary"
    assert run(capsys, "raster", "--algebra", "C2", "--type", "C", "--label", "1,0", "--resolution", "0")[0] == 1
    assert run(capsys, "raster", "--algebra", "A3", "--type", "C", "--label", "1,0,0")[0] == 1
    assert run(capsys, "raster", "--algebra", "C2", "--type", "C", "--label", "1")[0] == 1


def test_raster_boundary_zero_for_all_types():
    for name in ["C2", "G2", "A2"]:
        d = build_root_system(name)
        for ft in available_types(d):
            rows = raster_rows(d, ft, [2, 1], "hartley", 13)
            for r in rows:
                if r["boundary"]:
                    assert abs(r["value"]) <= 1e-11


def test_deterministic_output(capsys):
    argv = ["points", "--algebra", "B3", "--M", "4", "--type", "El+"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    argv = ["raster", "--algebra", "G2", "--type", "S", "--label", "1,1", "--resolution", "7"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "weylorbit.cli", "count", "--algebra", "C2", "--M", "4",
                          "--type", "C"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["enumerated"] == 9
