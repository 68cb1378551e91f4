import json
import random
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from magnusprop.cli import builtins
from magnusprop.cli.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from magnusprop.cli.presentation import (Comm, Gen, Power, PresentationAst, PresentationError,
                                         Product, format_presentation, parse_presentation)
from magnusprop.cli.realize import UnsupportedPresentation, realize

THREE_GROUP = "group T { gens: t a b; rels: t^3, a^9, b^9, [a,b], [a,t]*b^3, [b,t]*a^3; }"


def _schema(name):
    return json.loads(resources.files("magnusprop").joinpath("schemas", name).read_text())


def _texts():
    for name in builtins.CORPUS_NAMES:
        text = builtins.presentation_text(name)
        if text is not None:
            yield name, text


@pytest.mark.parametrize("name,text", list(_texts()))
def test_builtin_presentations_roundtrip(name, text):
    ast = parse_presentation(text)
    assert parse_presentation(format_presentation(ast)) == ast


def _random_word(rng, gens, depth):
    roll = rng.random()
    if depth == 0 or roll < 0.35:
        return Gen(rng.choice(gens))
    if roll < 0.6:
        return Power(_random_word(rng, gens, depth - 1), rng.choice([-3, -1, 2, 5]))
    if roll < 0.8:
        return Comm(tuple(_random_word(rng, gens, depth - 1) for _ in range(rng.randint(2, 3))))
    return Product(tuple(_random_word(rng, gens, depth - 1) for _ in range(rng.randint(2, 3))))


def test_fuzzed_presentations_roundtrip():
    rng = random.Random(0)
    for k in range(100):
        gens = tuple(rng.sample(["a", "b", "c", "t", "x1", "y_2"], rng.randint(1, 4)))
        rels = tuple(_random_word(rng, gens, 3) for _ in range(rng.randint(0, 4)))
        cls = rng.choice([None, 1, 2, 3])
        ast = PresentationAst(f"G{k}", gens, rels, cls)
        text = format_presentation(ast)
        assert parse_presentation(text) == ast, text


def test_relation_with_equals_sign():
    ast = parse_presentation("group D { gens: s r; rels: [r,s] = r^-2; }")
    assert ast.rels[0] == Product((Comm((Gen("r"), Gen("s"))), Power(Power(Gen("r"), -2), -1)))


def test_comments_and_optional_semicolon():
    ast = parse_presentation("# test\ngroup C { gens: a # one generator\n; rels: a^4 }")
    assert ast.gens == ("a",) and ast.rels == (Power(Gen("a"), 4),)


@pytest.mark.parametrize("text,line,col,fragment", [
    ("group G { gens: a b; rels: [a,b ; }", 1, 28, "unclosed '['"),
    ("group G { gens: a;\n rels: b^2; }", 2, 8, "undeclared generator 'b'"),
    ("group G { gens: a; rels: a^0; }", 1, 28, "zero power"),
    ("group G { gens: a a; }", 1, 19, "repeated generator"),
    ("group G { gens: a; rels: a^2; } extra", 1, 33, "trailing input"),
    ("group G { gens: a; rels: a $ ; }", 1, 28, "unexpected character"),
    ("group G { gens: a; rels: (a*a ; }", 1, 26, "unclosed '('"),
    ("group G { rels: ; }", 1, 11, "rels must come after gens"),
])
def test_parse_errors_report_positions(text, line, col, fragment):
    with pytest.raises(PresentationError) as info:
        parse_presentation(text)
    assert fragment in str(info.value)
    assert (info.value.line, info.value.col) == (line, col)


def test_realize_three_group():
    G = realize(parse_presentation(THREE_GROUP))
    assert G.order == 243
    assert "split extension" in G.provenance


def test_realize_metacyclic():
    G = realize(parse_presentation(builtins.presentation_text("metacyclic-3-2")))
    assert G.order == 27
    G5 = realize(parse_presentation(builtins.presentation_text("metacyclic-5-2")))
    assert G5.order == 125


def test_realize_cyclic_and_dihedral_texts():
    assert realize(parse_presentation(builtins.presentation_text("cyclic-6"))).order == 6
    assert realize(parse_presentation(builtins.presentation_text("dihedral-4"))).order == 8


def test_realize_class_annotation():
    G = realize(parse_presentation(builtins.presentation_text("g9")))
    assert G.hirsch_length == 9
    F = realize(parse_presentation(builtins.presentation_text("free-2-3")))
    assert F.hirsch_length == 5


def test_realize_rejects_outside_fragment():
    with pytest.raises(UnsupportedPresentation, match="not in supported fragment"):
        realize(parse_presentation("group D { gens: s r; rels: s^2, r^4, (s*r)^2; }"))
    with pytest.raises(UnsupportedPresentation):
        realize(parse_presentation("group F { gens: a b; rels: ; }"))
    with pytest.raises(UnsupportedPresentation):
        realize(parse_presentation("group N { gens: a b; rels: [a,b]; class: 4; }"))


def test_realize_checks_non_standard_relators():
    # an extra relator that fails in the candidate must be rejected
    with pytest.raises(UnsupportedPresentation):
        realize(parse_presentation("group C { gens: a b; rels: a^4, b^4, [a,b], a*b^-1*a; }"))


def test_mp_check_on_file_and_builtin(tmp_path, capsys):
    path = tmp_path / "t.txt"
    path.write_text(THREE_GROUP)
    out_json = tmp_path / "mp.json"
    assert main(["mp", "check", str(path), "--json", str(out_json)]) == EXIT_OK
    assert "NOT MP; witness g=a h=a^4" in capsys.readouterr().out
    jsonschema.validate(json.loads(out_json.read_text()), _schema("mp_report.schema.json"))
    assert main(["mp", "check", "dihedral-3"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("MP")


def test_mp_weak(capsys):
    assert main(["mp", "weak", "metacyclic-3-2"]) == EXIT_OK
    assert "WEAK MP" in capsys.readouterr().out


def test_witness_exit_codes(tmp_path, capsys):
    out_json = tmp_path / "w.json"
    assert main(["witness", "wreath", "-p", "5", "--json", str(out_json)]) == EXIT_OK
    jsonschema.validate(json.loads(out_json.read_text()), _schema("certificate.schema.json"))
    assert main(["witness", "wreath", "-p", "3"]) == EXIT_FAIL
    assert "NO WITNESS" in capsys.readouterr().out
    assert main(["witness", "wreath", "-p", "4"]) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["verify", "g9"],
    ["verify", "prop3.6"],
    ["verify", "prop4.3", "-p", "5", "-c", "2"],
    ["verify", "prop4.5", "-p", "5", "-c", "1"],
    ["verify", "example3.8", "-c", "1"],
    ["verify", "family", "--primes", "3", "--classes", "1,2"],
])
def test_verify_commands_pass_and_write_valid_certificates(argv, tmp_path, capsys):
    out_json = tmp_path / "cert.json"
    assert main(argv + ["--json", str(out_json)]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out
    jsonschema.validate(json.loads(out_json.read_text()), _schema("certificate.schema.json"))


def test_hall_command(capsys):
    assert main(["hall", "-r", "4", "-c", "3"]) == EXIT_OK
    assert "counts by weight: 4 + 6 + 20 = 30" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    assert main(["mp", "check", "no-such-group"]) == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("group G { gens: a b; rels: [a,b ; }")
    assert main(["realize", str(bad)]) == EXIT_USAGE
    assert "line 1, column 28" in capsys.readouterr().err
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(["verify", "prop4.3", "-p", "5"]) == EXIT_USAGE
    assert main(["mp", "check", "g9"]) == EXIT_USAGE


def test_list_shows_every_builtin(capsys):
    assert main(["--list"]) == EXIT_OK
    out = capsys.readouterr().out
    for b in builtins.BUILTINS:
        assert b.pattern in out
    for name in builtins.CORPUS_NAMES:
        builtins.build(name)


def test_bundle_command(tmp_path, capsys):
    path = tmp_path / "b.json"
    from magnusprop import families
    families.run_paper_suite(str(path), only=["cyclic_mp_table"])
    assert main(["verify", "bundle", str(path), "--no-rerun"]) == EXIT_FAIL
    assert "missing expected-failure entries: wreath_p3" in capsys.readouterr().out
    assert main(["verify", "bundle", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "magnusprop.cli.main", "hall", "-r", "2", "-c", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "2 + 1 + 2 = 5" in res.stdout
