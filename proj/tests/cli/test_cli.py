# Copyright 2026 The qudit-sculpt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""End-to-end checks of the sculpt command-line tool."""

import json
import os
import re
import subprocess

import pytest

CLI = os.environ.get("SCULPT_CLI", "sculpt")


def run(*args, check=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)
    if check is not None:
        assert proc.returncode == check, proc.stderr
    return proc


def scheme(tmp_path, kind, n):
    path = tmp_path / f"{kind}{n}.json"
    run("scheme", "--type", kind, "--n", n, "--out", path, check=0)
    return path


@pytest.mark.parametrize("kind,n,target", [
    ("singlet", 2, "singlet"), ("singlet", 3, "singlet"),
    ("dicke", 2, "dicke"), ("dicke", 3, "dicke"),
    ("symvariant", 3, "symmetric"),
])
def test_verify_passes(tmp_path, kind, n, target):
    path = scheme(tmp_path, kind, n)
    proc = run("verify", path, "--target", target, check=0)
    report = json.loads(proc.stdout)
    assert report["passed"] is True
    assert report["failures"] == []
    assert report["N"] == n


def test_verify_wrong_target_exit_1(tmp_path):
    path = scheme(tmp_path, "singlet", 3)
    proc = run("verify", path, "--target", "dicke", check=1)
    assert "sign(0,1)" in proc.stderr


def test_mutation_flipped_phase(tmp_path):
    path = scheme(tmp_path, "singlet", 3)
    graph = json.loads(path.read_text())
    edge = graph["dots"][1]["edges"][1]
    assert edge["phase"] == {"num": 1, "den": 1}
    edge["phase"] = {"num": 0, "den": 1}
    mutant = tmp_path / "mutant.json"
    mutant.write_text(json.dumps(graph))
    proc = run("verify", mutant, "--target", "singlet", check=1)
    assert proc.stderr.startswith("verification failed:")
    named = proc.stderr.split(":", 1)[1].split()
    assert named
    report = json.loads(proc.stdout)
    assert set(named) == {c["name"] for c in report["checks"] if not c["passed"]}


@pytest.mark.parametrize("args", [
    ["verify", "missing.json", "--target", "singlet"],
    ["scheme", "--type", "ghz", "--n", "3"],
    ["scheme", "--type", "singlet", "--n", "1"],
    ["scheme", "--type", "singlet"],
    ["bogus"],
    [],
])
def test_bad_input_exit_2(tmp_path, args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 2


def test_malformed_graph_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"N": 2, "d": 2, "dots": [{"edges": [{"mode": 5}]}]}')
    run("verify", bad, "--target", "singlet", check=2)
    bad.write_text("{nope")
    run("matchings", bad, check=2)
    run("export-dot", bad, check=2)


def test_bad_basis_and_tol_exit_2(tmp_path):
    path = scheme(tmp_path, "singlet", 2)
    run("verify", path, "--target", "singlet", "--basis", "polar", check=2)
    run("verify", path, "--target", "singlet", "--tol", "-1", check=2)


def test_scheme_round_trip(tmp_path):
    path = scheme(tmp_path, "singlet", 3)
    text = path.read_text()
    graph = json.loads(text)
    assert len(graph["dots"]) == 6
    assert json.dumps(graph, sort_keys=True, indent=2) + "\n" == text
    stdout = run("scheme", "--type", "singlet", "--n", 3, check=0).stdout
    assert stdout == text
    assert len(json.loads(scheme(tmp_path, "dicke", 2).read_text())["dots"]) == 2


def test_matchings(tmp_path):
    proc = run("matchings", scheme(tmp_path, "singlet", 2), check=0)
    listing = json.loads(proc.stdout)
    assert listing["count"] == 2
    assert len(listing["matchings"]) == listing["count"]
    isolated = tmp_path / "isolated.json"
    isolated.write_text(json.dumps({"N": 2, "d": 2, "dots": [
        {"edges": [{"mode": 0, "phase": {"num": 0, "den": 1}, "color": {"basis": "fourier", "index": 0}}]},
        {"edges": [{"mode": 0, "phase": {"num": 0, "den": 1}, "color": {"basis": "fourier", "index": 1}}]},
    ]}))
    assert json.loads(run("matchings", isolated, check=0).stdout)["count"] == 0


def test_compile_and_simulate_sweep(tmp_path):
    circuit = tmp_path / "c.json"
    run("compile", scheme(tmp_path, "singlet", 2), "--reflectivity", 0.05, "--out", circuit, check=0)
    report = json.loads(run("simulate", circuit, "--sweep", "0.2,0.1,0.05", "--all-outcomes", check=0).stdout)
    fids = [row["fidelity"] for row in report["sweep"]]
    assert fids[0] < fids[1] <= fids[2]
    assert fids[2] >= 0.999
    assert abs(report["outcome_probability_sum"] - 1) < 1e-8
    assert report["direct_projection"]["consistent"] is True
    assert report["herald"]["fidelity"] >= 0.999


def test_simulate_three_reports_reference(tmp_path):
    circuit = tmp_path / "c3.json"
    run("compile", scheme(tmp_path, "singlet", 3), "--out", circuit, check=0)
    report = json.loads(run("simulate", circuit, check=0).stdout)
    assert report["reference"]["expression"] == "2*sqrt(6)/3^8"
    assert report["reference"]["value"] == pytest.approx(2 * 6 ** 0.5 / 3 ** 8, rel=1e-15)
    assert report["direct_projection"]["abs_difference"] <= 1e-12
    assert report["ideal"]["weight"] == pytest.approx(report["ideal"]["oracle_weight"], abs=1e-12)
    assert report["circuit"]["rails"] == 15


def test_simulate_thread_cap_deterministic(tmp_path):
    circuit = tmp_path / "c.json"
    run("compile", scheme(tmp_path, "dicke", 2), "--out", circuit, check=0)
    outs = []
    for threads in ("1", "3"):
        env = dict(os.environ, SCULPT_THREADS=threads)
        proc = subprocess.run([CLI, "simulate", str(circuit), "--sweep", "0.3,0.2,0.1"],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 0
        outs.append(proc.stdout)
    assert outs[0] == outs[1]


@pytest.mark.parametrize("r", ["0", "1", "1.5", "-0.1", "nan"])
def test_invalid_reflectivity_exit_2(tmp_path, r):
    run("compile", scheme(tmp_path, "singlet", 2), "--reflectivity", r, check=2)


def test_invalid_sweep_exit_2(tmp_path):
    circuit = tmp_path / "c.json"
    run("compile", scheme(tmp_path, "singlet", 2), "--out", circuit, check=0)
    run("simulate", circuit, "--sweep", "0.1,2", check=2)


def test_circuit_round_trip_through_files(tmp_path):
    circuit = tmp_path / "c.json"
    run("compile", scheme(tmp_path, "dicke", 3), "--reflectivity", 0.2, "--out", circuit, check=0)
    text = circuit.read_text()
    again = run("compile", tmp_path / "dicke3.json", "--reflectivity", 0.2, check=0).stdout
    assert again == text

    def keys_sorted(node):
        if isinstance(node, dict):
            return list(node) == sorted(node) and all(keys_sorted(v) for v in node.values())
        if isinstance(node, list):
            return all(keys_sorted(v) for v in node)
        return True

    parsed = json.loads(text, object_pairs_hook=dict)
    assert keys_sorted(parsed)
    assert "0.78539816339744828" in text


def test_export_dot_structure(tmp_path):
    dot = run("export-dot", scheme(tmp_path, "singlet", 3), check=0).stdout
    assert dot.startswith("graph sculpting {")
    assert len(re.findall(r"^\s*c\d+ \[", dot, re.M)) == 3
    assert len(re.findall(r"^\s*v\d+ \[", dot, re.M)) == 6
    assert len(re.findall(r"v\d+ -- c\d+", dot)) == 12


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
def test_export_dot_parses(tmp_path):
    pydot = pytest.importorskip("pydot")
    dot = run("export-dot", scheme(tmp_path, "dicke", 3), check=0).stdout
    graphs = pydot.graph_from_dot_data(dot)
    assert graphs and len(graphs) == 1
    graph = graphs[0]
    assert len(graph.get_edges()) == 12
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"N": 2, "d": 2, "dots": []}))
    empty_dot = run("export-dot", empty, check=0).stdout
    parsed = pydot.graph_from_dot_data(empty_dot)[0]
    assert len(parsed.get_edges()) == 0
    assert {n.get_name() for n in parsed.get_nodes()} >= {"c0", "c1"}
