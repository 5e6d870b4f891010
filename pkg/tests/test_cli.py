import json
import os
import subprocess
import sys

import pytest

from signed_at.cli import main
from signed_at.fileio import dumps_graph
from signed_at.generators import complete_bipartite, complete_graph, wheel


@pytest.fixture
def files(tmp_path):
    assert main(["figure2", "--out-dir", str(tmp_path)]) == 0
    k4 = tmp_path / "k4.json"
    k4.write_text(dumps_graph(complete_graph(4, -1)))
    k24 = tmp_path / "k24.json"
    k24.write_text(dumps_graph(complete_bipartite(2, 4)))
    w = wheel(5)
    wp = tmp_path / "wheel.json"
    wp.write_text(dumps_graph(w.graph, w.outer, w.faces))
    return tmp_path


def test_figure2_list_color_refuted(files, capsys):
    code = main(["list-color", str(files / "figure2.json"), "--lists", str(files / "figure2.lists")])
    assert code == 1
    assert "6561 assignments exhausted" in capsys.readouterr().out


def test_poly_and_at(files, capsys):
    assert main(["poly", str(files / "k4.json"), "-o", str(files / "k4.poly")]) == 0
    assert "AT = 3" in capsys.readouterr().out
    first = (files / "k4.poly").read_bytes()
    main(["poly", str(files / "k4.json"), "-o", str(files / "k4.poly")])
    assert (files / "k4.poly").read_bytes() == first
    assert main(["at", str(files / "k4.json"), "-o", str(files / "k4.cert")]) == 0
    assert "AT = 3" in capsys.readouterr().out
    assert main(["verify", str(files / "k4.cert"), "--graph", str(files / "k4.json")]) == 0


def test_certify_and_verify(files, capsys):
    g = files / "figure2.json"
    cert = files / "f2.cert"
    assert main(["certify-at5", str(g), "-o", str(cert)]) == 0
    out = capsys.readouterr().out
    assert "AT <= 5 certified" in out
    assert main(["verify", str(cert), "--graph", str(g)]) == 0
    doc = json.loads(cert.read_text())
    doc["imbalance"]["odd"] += 1
    cert.write_text(json.dumps(doc))
    assert main(["verify", str(cert)]) == 1
    assert "invalid:" in capsys.readouterr().out


def test_nice_on_wheel(files, capsys):
    cert = files / "nice.cert"
    assert main(["nice", str(files / "wheel.json"), "--edge", "v2,v3", "-o", str(cert)]) == 0
    assert main(["verify", str(cert), "--graph", str(files / "wheel.json")]) == 0
    assert main(["nice", str(files / "wheel.json"), "--edge", "v2"]) == 2
    assert main(["nice", str(files / "k4.json"), "--edge", "v1,v2"]) == 2


def test_density_commands(files, capsys):
    assert main(["mad", str(files / "figure2.json")]) == 0
    assert "mad = 9/2" in capsys.readouterr().out
    assert main(["at-negative", str(files / "figure2.json")]) == 0
    assert "AT = 4" in capsys.readouterr().out
    assert main(["at-negative", str(files / "k24.json")]) == 2
    assert main(["at-negative", str(files / "k24.json"), "--as-negative"]) == 0


def test_coloring_commands(files, capsys):
    assert main(["chromatic", str(files / "figure2.json")]) == 0
    assert "chromatic number = 2" in capsys.readouterr().out
    assert main(["refute", str(files / "k24.json"), "-k", "2", "-m", "2", "-o", str(files / "k24.lists")]) == 0
    assert main(["list-color", str(files / "k24.json"), "--lists", str(files / "k24.lists")]) == 1
    capsys.readouterr()
    assert main(["refute", str(files / "k4.json"), "-k", "4", "-m", "2"]) == 1


def test_switch_and_antibalanced(files, capsys):
    out = files / "switched.json"
    assert main(["switch", str(files / "k4.json"), "--set", "v1,v2", "-o", str(out)]) == 0
    assert main(["antibalanced", str(out)]) == 0
    out_text = capsys.readouterr().out
    assert "switch at: v1,v2" in out_text or "switch at: v3,v4" in out_text
    assert main(["antibalanced", str(files / "k24.json")]) == 0  # bipartite, every cycle even
    pos = files / "k3.json"
    pos.write_text(dumps_graph(complete_graph(3, 1)))
    assert main(["antibalanced", str(pos)]) == 1


def test_error_exit_codes(files, capsys):
    assert main(["mad", str(files / "missing.json")]) == 2
    bad = files / "bad.json"
    bad.write_text("{nope")
    assert main(["poly", str(bad)]) == 2
    assert main(["--expansion-cap", "3", "poly", str(files / "k4.json")]) == 3
    assert main(["--enum-cap", "3", "at", str(files / "k4.json")]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["poly"])
    assert exc.value.code == 2


def test_cap_flag_reaches_library(files, monkeypatch):
    monkeypatch.delenv("SIGNED_AT_MAD_CAP", raising=False)
    assert main(["--mad-cap", "4", "mad", str(files / "k4.json")]) == 0
    assert main(["--mad-cap", "3", "mad", str(files / "k4.json")]) == 3
    # the flag does not outlive the call
    assert "SIGNED_AT_MAD_CAP" not in os.environ
    assert main(["mad", str(files / "k4.json")]) == 0


def test_module_entry_point(files):
    run = subprocess.run([sys.executable, "-m", "signed_at", "mad", str(files / "k4.json")],
                         capture_output=True, text=True)
    assert run.returncode == 0 and "mad = 3/1" in run.stdout
