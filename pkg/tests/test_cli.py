import json

from ordcopies import (
    cs_full,
    cube_to_json,
    layered_to_json,
    LayeredSet,
    FinCof,
    parse_ordinal,
    poset_to_text,
    chain,
    antichain,
    poset_from_text,
)
from ordcopies.cli import run


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def write_json(tmp_path, name, obj):
    return write(tmp_path, name, json.dumps(obj))


class TestOrdCommands:
    def test_add(self):
        result = run(["ord", "add", "w+1", "w"])
        assert (result.exit_code, result.stdout, result.stderr) == (0, "w*2\n", "")

    def test_mul_pow_cmp(self):
        assert run(["ord", "mul", "2", "w"]).stdout == "w\n"
        assert run(["ord", "pow", "2", "w"]).stdout == "w\n"
        assert run(["ord", "cmp", "w", "w+1"]).stdout == "LT\n"
        assert run(["ord", "cmp", "w", "w"]).stdout == "EQ\n"

    def test_classify(self):
        result = run(["ord", "classify", "w^(2)+3"])
        assert result.exit_code == 0
        assert result.stdout == "kind: successor\nindecomposable: false\ngamma: w^(2)\nr: 3\n"
        assert run(["ord", "classify", "0"]).stdout == "kind: zero\nindecomposable: false\n"

    def test_parse_error_exits_2(self):
        result = run(["ord", "add", "w +", "w"])
        assert result.exit_code == 2
        assert result.stdout == ""
        assert "error" in result.stderr


class TestSetCommands:
    def test_type_of_full_dim2(self, tmp_path):
        path = write_json(tmp_path, "full_dim2.json", cube_to_json(cs_full(2)))
        result = run(["set", "type", "--file", path])
        assert (result.exit_code, result.stdout) == (0, "w^(2)\n")

    def test_member(self, tmp_path):
        path = write_json(tmp_path, "full.json", cube_to_json(cs_full(2)))
        assert run(["set", "member", "--file", path, "[3,5]"]).stdout == "true\n"

    def test_ideal(self, tmp_path):
        path = write_json(tmp_path, "full.json", cube_to_json(cs_full(2)))
        assert run(["set", "ideal", "--file", path]).stdout == "false\n"
        finite = {"dim": 1, "prefix": [1, 1], "cycle": [0]}
        path = write_json(tmp_path, "finite.json", finite)
        assert run(["set", "ideal", "--file", path]).stdout == "true\n"

    def test_select_and_copy(self, tmp_path):
        path = write_json(tmp_path, "full.json", cube_to_json(cs_full(2)))
        assert run(["set", "select", "--file", path, "w*2+3"]).stdout == "[2, 3]\n"
        assert run(["set", "copy", "--file", path, "w^(2)"]).stdout == "true\n"

    def test_domain_error_exits_1(self, tmp_path):
        path = write_json(tmp_path, "empty.json", {"dim": 1, "prefix": [], "cycle": [0]})
        result = run(["set", "select", "--file", path, "0"])
        assert result.exit_code == 1
        assert result.stdout == ""

    def test_bad_json_exits_2(self, tmp_path):
        path = write(tmp_path, "bad.json", "{not json")
        assert run(["set", "type", "--file", path]).exit_code == 2

    def test_missing_file_exits_2(self):
        assert run(["set", "type", "--file", "/nonexistent.json"]).exit_code == 2


class TestLayerCommands:
    def test_sset_supp_ideal_type(self, tmp_path):
        path = write_json(tmp_path, "full.json", layered_to_json(LayeredSet.full()))
        assert json.loads(run(["layer", "sset", "--file", path, "2"]).stdout) == {
            "kind": "cofinite",
            "exceptions": [0, 1],
        }
        assert json.loads(run(["layer", "supp", "--file", path]).stdout) == {
            "kind": "cofinite",
            "exceptions": [],
        }
        assert run(["layer", "ideal", "--file", path]).stdout == "false\n"
        assert run(["layer", "type", "--file", path]).stdout == "w^(w)\n"

    def test_subset(self, tmp_path):
        full = write_json(tmp_path, "full.json", layered_to_json(LayeredSet.full()))
        minus = write_json(
            tmp_path,
            "minus.json",
            layered_to_json(LayeredSet.make(["full", "empty"], "full")),
        )
        assert run(["layer", "subset", "--file", full, "--other", minus]).stdout == "true\n"

    def test_fusion(self, tmp_path):
        full = write_json(tmp_path, "full.json", layered_to_json(LayeredSet.full()))
        index = write_json(tmp_path, "s.json", FinCof.cofinite(range(2)).to_json())
        result = run(["layer", "fusion", "--file", full, "--file", full, "--s", index])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"prefix": ["empty", "empty"], "tail": "full"}

    def test_fusion_precondition_exits_1(self, tmp_path):
        full = write_json(tmp_path, "full.json", layered_to_json(LayeredSet.full()))
        finite = write_json(tmp_path, "s.json", FinCof.finite({1}).to_json())
        result = run(["layer", "fusion", "--file", full, "--s", finite])
        assert result.exit_code == 1


class TestPosetCommands:
    def test_sq_of_chain(self, tmp_path):
        path = write(tmp_path, "chain.txt", poset_to_text(chain(3)))
        result = run(["poset", "sq", "--file", path])
        assert result.exit_code == 0
        assert poset_from_text(result.stdout).size == 1

    def test_sep(self, tmp_path):
        path = write(tmp_path, "anti.txt", poset_to_text(antichain(2)))
        assert run(["poset", "sep", "--file", path]).stdout == "true\n"

    def test_product_and_iso(self, tmp_path):
        a = write(tmp_path, "a.txt", poset_to_text(antichain(2)))
        b = write(tmp_path, "b.txt", poset_to_text(antichain(2)))
        product = run(["poset", "product", "--file", a, "--other", b])
        assert poset_from_text(product.stdout) == antichain(4)
        iso = run(["poset", "iso", "--file", a, "--other", b])
        assert iso.stdout.strip() in ("0 1", "1 0")
        c = write(tmp_path, "c.txt", poset_to_text(chain(2)))
        assert run(["poset", "iso", "--file", a, "--other", c]).stdout == "none\n"

    def test_bad_format_exits_2(self, tmp_path):
        path = write(tmp_path, "bad.txt", "2\n11\n")
        assert run(["poset", "sq", "--file", path]).exit_code == 2


class TestFactorizeCommand:
    def test_text_output(self):
        result = run(["factorize", "w^(2)"])
        assert (result.exit_code, result.stdout) == (0, "(rp(P(w)/fin))^+\n")

    def test_formats(self):
        assert run(["factorize", "--format", "latex", "w"]).stdout == "(P(\\omega)/\\mathrm{Fin})^+\n"
        doc = json.loads(run(["factorize", "--format", "json", "w"]).stdout)
        assert doc == {"kind": "positive", "inner": {"kind": "quotient", "gamma": "1"}}

    def test_iterate(self):
        result = run(["factorize", "--iterate", "w*2"])
        assert result.stdout == "(P(w)/fin)^+ * ω₁-closed separative atomless π\n"

    def test_finite_alpha_exits_1(self):
        assert run(["factorize", "5"]).exit_code == 1


class TestVerifyCommand:
    def test_single_suite(self):
        result = run(["verify", "--suite", "factorizer"])
        assert result.exit_code == 0
        assert "ok   factorizer.goldens" in result.stdout
        assert result.stdout.endswith("all checks passed\n")

    def test_unknown_suite_exits_2(self):
        assert run(["verify", "--suite", "nonsense"]).exit_code == 2


class TestDispatch:
    def test_unknown_command_exits_2(self):
        result = run(["frobnicate"])
        assert result.exit_code == 2
        assert result.stdout == ""

    def test_printed_ordinals_reparse(self, tmp_path):
        outputs = [
            run(["ord", "add", "w^(2)*2+w", "w*4+1"]).stdout,
            run(["ord", "mul", "w+3", "w^(2)+2"]).stdout,
            run(["ord", "pow", "w+1", "3"]).stdout,
        ]
        path = write_json(tmp_path, "full.json", cube_to_json(cs_full(3)))
        outputs.append(run(["set", "type", "--file", path]).stdout)
        for text in outputs:
            parse_ordinal(text.strip())
