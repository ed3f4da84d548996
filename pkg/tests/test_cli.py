import json
import shutil
import subprocess
import sys

import pytest

from staruniv.cli import main
from staruniv.graph import complete_graph, cycle_graph, path_graph, subdivide_all
from staruniv.generators import petersen
from staruniv.io import encode


@pytest.fixture
def files(tmp_path):
    def put(name, G):
        p = tmp_path / name
        p.write_bytes(encode(G))
        return str(p)
    return put


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_star_exit_codes(capsys, files):
    pet = files("p.json", petersen())
    code, out = run(capsys, "check", "--host", pet, "--star", "1,1,1")
    assert code == 0 and json.loads(out)["holds"]
    code, out = run(capsys, "check", "--host", pet, "--star", "1,1,1,1")
    assert code == 1 and json.loads(out)["witness"] is None


def test_check_modes(capsys, files):
    pet = files("p.json", petersen())
    k4 = files("k4.json", complete_graph(4))
    k5 = files("k5.json", complete_graph(5))
    assert run(capsys, "check", "--host", pet, "--pattern", k4, "--minor")[0] == 0
    assert run(capsys, "check", "--host", pet, "--pattern", k4, "--topo")[0] == 0
    assert run(capsys, "check", "--host", pet, "--pattern", k4)[0] == 1
    assert run(capsys, "check", "--host", pet, "--pattern", k5, "--topo")[0] == 1
    code, out = run(capsys, "check", "--host", pet, "--paths", "0", "1")
    assert code == 0 and json.loads(out)["count"] == 3


def test_errors(capsys, tmp_path, files):
    bad = tmp_path / "bad.json"
    data = b'{"n": 3, "edges": [[0, 1],'
    bad.write_bytes(data)
    code, out = run(capsys, "check", "--host", str(bad), "--star", "1,1,1")
    doc = json.loads(out)
    assert code == 2 and doc["error"] == "parse" and doc["offset"] == len(data)
    code, out = run(capsys, "check", "--host", str(bad))
    assert code == 2
    code, out = run(capsys, "frobnicate")
    assert code == 2 and json.loads(out)["error"] == "usage"
    two = files("two.json", path_graph(1).disjoint_union(path_graph(1)))
    code, out = run(capsys, "decompose", "--star", "1,2,2", "--host", two)
    doc = json.loads(out)
    assert code == 2 and "not connected" in doc["message"] and "certificate" in doc
    code, out = run(capsys, "check", "--host", str(tmp_path / "missing.json"), "--star", "1,1,1")
    assert code == 2


def test_determinism(capsys, files):
    G = files("c.json", cycle_graph(40))
    outs = [run(capsys, "decompose", "--star", "1,2,2", "--relaxed-m", "4", "--host", G)[1] for _ in range(2)]
    assert outs[0] == outs[1] and json.loads(outs[0])["holds"]
    outs = [run(capsys, "gamma-star", "--k", "4", "--rays", "3", "--len", "5", "--figure1")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_round_trip(capsys, tmp_path, files):
    pet = files("p.json", petersen())
    k4 = files("k4.json", complete_graph(4))
    docs = {}
    docs["topo"] = run(capsys, "check", "--host", pet, "--pattern", k4, "--topo")[1]
    docs["minor"] = run(capsys, "check", "--host", pet, "--pattern", k4, "--minor")[1]
    docs["dec"] = run(capsys, "decompose", "--star", "1,2,2", "--relaxed-m", "4",
                      "--host", files("c.json", cycle_graph(40)))[1]
    docs["skfree"] = run(capsys, "embed-skfree", "--k", "4", "--host", files("c6.json", cycle_graph(6)))[1]
    docs["embed"] = run(capsys, "embed", "--star", "1,1,2,2", "--relaxed-m", "4",
                        "--host", files("p.json", path_graph(40)))[1]
    docs["gadget"] = run(capsys, "gadget", "--star", "2,2,2", "--alpha", "12", "--depth", "2", "--N", "3",
                         "--check", "claim2", "--certificates")[1]
    docs["gadget"] = json.dumps(json.loads(docs["gadget"])["certificates"])
    for name, text in docs.items():
        p = tmp_path / f"{name}.cert"
        p.write_text(text)
        code, out = run(capsys, "verify", str(p))
        assert code == 0, (name, out)
        assert json.loads(out)["valid"]
    # tamper with one certificate
    doc = json.loads(docs["topo"])
    doc["embedding"]["vertex_map"][0] = doc["embedding"]["vertex_map"][1]
    p = tmp_path / "bad.cert"
    p.write_text(json.dumps(doc))
    code, out = run(capsys, "verify", str(p))
    assert code == 1 and json.loads(out)["problems"]


def test_graph_commands(capsys, files):
    g = files("k3.json", complete_graph(3))
    code, out = run(capsys, "blowup", g, "--n", "2")
    assert code == 0 and json.loads(out)["n"] > 3
    code, out = run(capsys, "trivial-universal", "--k", "1", "--n", "3")
    assert json.loads(out)["n"] == 6
    code, out = run(capsys, "suppress", files("c.json", cycle_graph(7)))
    assert code == 2 and json.loads(out)["message"] == "component is a bare cycle"
    sub = files("k4s.json", subdivide_all(complete_graph(4), 2))
    code, out = run(capsys, "suppress", sub)
    assert code == 0 and json.loads(out) == json.loads(encode(complete_graph(4)))
    code, out = run(capsys, "trivial-universal", "--k", "1", "--n", "3", "--format", "dot")
    assert out.startswith("graph")


def test_registry_commands(capsys, tmp_path, files):
    d = str(tmp_path / "reg")
    code, out = run(capsys, "registry", "list", "--dir", d)
    assert code == 2
    host = tmp_path / "h.json"
    host.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]], "colors": [1, 0, 0]}))
    code, out = run(capsys, "registry", "admit", "--dir", d, "--star", "1,1,2,2", "--relaxed-m", "4",
                    "--host", str(host))
    assert code == 0 and json.loads(out)["n"] == 1
    code, out = run(capsys, "registry", "list", "--dir", d)
    assert code == 0 and "1" in json.loads(out)["classes"]


@pytest.mark.skipif(shutil.which("staruniv") is None, reason="console script not installed")
def test_console_script(tmp_path):
    p = tmp_path / "k4.json"
    p.write_bytes(encode(complete_graph(4)))
    res = subprocess.run(["staruniv", "check", "--host", str(p), "--star", "1,1,1"], capture_output=True)
    assert res.returncode == 0 and json.loads(res.stdout)["holds"]
    res = subprocess.run([sys.executable, "-m", "staruniv.cli", "check", "--host", str(p), "--star", "1,1,1,1"],
                         capture_output=True)
    assert res.returncode == 1
