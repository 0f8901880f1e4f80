import json

import pytest

from diachromatic import (
    Coloring,
    complete_symmetric,
    directed_cycle,
    hamiltonian_cycle_factorization,
    k2_k3_k4_over_c6,
    unfold_complete_to_cycle,
)
from diachromatic.cli import main
from diachromatic.serialize import (
    coloring_from_obj,
    coloring_to_obj,
    digraph_from_obj,
    digraph_to_dot,
    digraph_to_obj,
    detachment_from_obj,
    detachment_to_obj,
    dumps,
    factorization_from_obj,
    factorization_to_obj,
)


class TestJsonRoundTrips:
    def test_digraph_bytes_identical(self):
        d = complete_symmetric(4)
        text = dumps(digraph_to_obj(d))
        again = dumps(digraph_to_obj(digraph_from_obj(json.loads(text))))
        assert text == again

    def test_digraph_with_labels(self):
        inst = k2_k3_k4_over_c6()
        obj = digraph_to_obj(inst.digraph)
        back = digraph_from_obj(obj)
        assert back.arcs == inst.digraph.arcs
        assert back.label_map == inst.digraph.label_map

    def test_coloring(self):
        c = Coloring(3, (1, 2, 3, 1))
        assert coloring_from_obj(coloring_to_obj(c)) == c

    def test_factorization(self):
        f = hamiltonian_cycle_factorization(5)
        back = factorization_from_obj(factorization_to_obj(f))
        assert back.m == f.m
        assert all(a.arcs == b.arcs for a, b in zip(back.factors, f.factors))

    def test_detachment(self):
        u = unfold_complete_to_cycle(3)
        obj = detachment_to_obj(u.detachment)
        back = detachment_from_obj(obj, u.cycle, complete_symmetric(3))
        assert back.mapping == u.detachment.mapping


class TestDot:
    def test_plain_cycle(self):
        dot = digraph_to_dot(directed_cycle(3), merge_symmetric=False)
        assert "digraph G {" in dot
        assert "0 -> 1;" in dot and "2 -> 0;" in dot

    def test_symmetric_pairs_merge(self):
        dot = digraph_to_dot(complete_symmetric(3))
        assert dot.count("dir=both") == 3
        assert "->" in dot

    def test_clusters_for_product_blocks(self):
        inst = k2_k3_k4_over_c6()
        dot = digraph_to_dot(inst.digraph, coloring=inst.coloring, blocks=inst.block_of)
        assert dot.count("subgraph cluster_") == 6
        sizes = sorted(inst.block_of.count(b) for b in set(inst.block_of))
        assert sizes == [2, 2, 3, 3, 4, 4]

    def test_coloring_fills(self):
        dot = digraph_to_dot(directed_cycle(3), coloring=Coloring(3, (1, 2, 3)))
        assert dot.count("fillcolor=") == 3


class TestCli:
    def run(self, *argv, expect=0):
        code = main(list(argv))
        assert code == expect, f"{argv} exited {code}"

    def test_gen_json(self, tmp_path, capsys):
        out = tmp_path / "c6.json"
        self.run("gen", "--kind", "directed-cycle", "--n", "6", "--out", str(out))
        obj = json.loads(out.read_text())
        assert obj["order"] == 6 and len(obj["arcs"]) == 6

    def test_gen_dot(self, capsys):
        self.run("gen", "--kind", "directed-cycle", "--n", "4", "--format", "dot")
        assert "digraph" in capsys.readouterr().out

    def test_gen_rejects_bad_n(self, capsys):
        self.run("gen", "--kind", "directed-cycle", "--n", "1", expect=1)

    def test_product_and_oracle(self, tmp_path, capsys):
        base = tmp_path / "c3.json"
        self.run("gen", "--kind", "directed-cycle", "--n", "3", "--out", str(base))
        prod = tmp_path / "c3c3.json"
        self.run("product", "--base", str(base), "--fiber", str(base), "--i", "1",
                 "--out", str(prod))
        obj = json.loads(prod.read_text())
        assert obj["order"] == 9
        self.run("oracle", "--param", "dc", "--input", str(prod), "--budget", "1e7")
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == 3 and doc["exhaustive"]

    def test_factorize_path(self, capsys):
        self.run("factorize", "--kind", "path", "--n", "4")
        doc = json.loads(capsys.readouterr().out)
        assert doc["m"] == 4 and len(doc["factors"]) == 4

    def test_factorize_cycle_rejects_4(self, capsys):
        self.run("factorize", "--kind", "cycle", "--n", "4", expect=1)

    def test_unfold_and_amalgamate(self, tmp_path, capsys):
        self.run("unfold", "--k", "4")
        doc = json.loads(capsys.readouterr().out)
        assert doc["cycle"]["order"] == 12
        assert len(doc["map"]) == 12
        cyc = tmp_path / "c12.json"
        cyc.write_text(dumps(doc["cycle"]))
        self.run("amalgamate", "--input", str(cyc))
        out = json.loads(capsys.readouterr().out)
        assert out["found"] and out["exhaustive"] and out["k"] == 4

    def test_construct_cor6(self, capsys):
        self.run("construct", "cor6", "--n", "3")
        doc = json.loads(capsys.readouterr().out)
        assert doc["certificate"]["k"] == 9
        assert doc["certificate"]["size"] == 72

    def test_construct_thm2_dot_clusters(self, capsys):
        self.run("construct", "thm2", "--format", "dot")
        dot = capsys.readouterr().out
        assert dot.count("subgraph cluster_") == 6

    def test_construct_thm9(self, capsys):
        self.run("construct", "thm9", "--n", "3", "--t", "2")
        doc = json.loads(capsys.readouterr().out)
        assert doc["colors"] == 9 and doc["upper_bound"] == 9 and doc["value_pinned"]

    def test_construct_thm12_discrepancy_t1(self, capsys):
        self.run("construct", "thm12", "--n", "3", "--t", "1")
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "refuted"
        assert "finding" in doc

    def test_construct_thm12_t2(self, capsys):
        self.run("construct", "thm12", "--n", "3", "--t", "2")
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "constructed" and doc["lower_bound"] == 9

    def test_construct_cor19(self, capsys):
        self.run("construct", "cor19", "--n", "4", "--i", "1")
        doc = json.loads(capsys.readouterr().out)
        assert doc["certificate"]["k"] == 20
        assert doc["certificate"]["order"] == 80
        assert doc["certificate"]["size"] == 380

    def test_check_roundtrip(self, tmp_path, capsys):
        self.run("construct", "cor6", "--n", "3", "--out", str(tmp_path / "inst.json"))
        doc = json.loads((tmp_path / "inst.json").read_text())
        (tmp_path / "d.json").write_text(dumps(doc["digraph"]))
        (tmp_path / "c.json").write_text(dumps(doc["coloring"]))
        self.run("check", "--input", str(tmp_path / "d.json"),
                 "--coloring", str(tmp_path / "c.json"))
        rep = json.loads(capsys.readouterr().out)
        assert rep["complete"] and rep["acyclic"] and rep["minimal"]

    def test_bounds_commands(self, capsys):
        self.run("bounds", "dac-upper", "--m", "7", "--n", "3")
        assert json.loads(capsys.readouterr().out)["dac_upper"] == 9
        self.run("bounds", "h-lower", "--m", "5", "--n", "3")
        assert json.loads(capsys.readouterr().out)["h_lower"] == 9
        self.run("bounds", "josephus", "--n", "2", "--i", "10")
        assert json.loads(capsys.readouterr().out)["values"][-1] == 1024
        self.run("bounds", "dc-formula", "--n", "3", "--i", "1")
        assert json.loads(capsys.readouterr().out)["dc"] == 3

    def test_bounds_dc_formula_from_file(self, tmp_path, capsys):
        path = tmp_path / "k4.json"
        self.run("gen", "--kind", "complete-symmetric", "--n", "4", "--out", str(path))
        self.run("bounds", "dc-formula", "--input", str(path), "--dch", "2")
        doc = json.loads(capsys.readouterr().out)
        assert doc["lower_bound"] == 8 and not doc["exact"]

    def test_export_roundtrip_canonical(self, tmp_path, capsys):
        path = tmp_path / "d.json"
        self.run("gen", "--kind", "complete-symmetric", "--n", "3", "--out", str(path))
        first = path.read_text()
        self.run("export", "--input", str(path), "--format", "json")
        assert capsys.readouterr().out == first

    def test_table_exit_zero(self, capsys):
        self.run("table", "--families", "cor6,josephus,thm18")
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_table_tsv(self, capsys):
        self.run("table", "--families", "cor19", "--format", "tsv")
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].split("\t")[0] == "family"
        assert len(lines) == 3

    def test_table_unknown_family(self):
        with pytest.raises(SystemExit):
            main(["table", "--families", "nope"])

    def test_repeated_runs_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            self.run("construct", "cor6", "--n", "5", "--out", str(path))
        assert a.read_bytes() == b.read_bytes()
        for path in (a, b):
            self.run("factorize", "--kind", "cycle", "--n", "8", "--out", str(path))
        assert a.read_bytes() == b.read_bytes()
