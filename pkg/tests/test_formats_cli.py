"""Text formats and the command-line interface."""
from fractions import Fraction

import pytest

from rootcone import corpus
from rootcone.cli import main
from rootcone.errors import ParseError
from rootcone.formats import parse_input, serialize_poset, serialize_skew

DIAMOND_FILE = """\
poset
n 4
covers
1 2
1 3
2 4
3 4
embedding
1 0 0
2 -1 1
3 1 1
4 0 2
"""

SKEW_FILE = """\
skew
rows 2 2
1 2
1 2
"""


@pytest.fixture
def diamond_path(tmp_path):
    f = tmp_path / "diamond.poset"
    f.write_text(DIAMOND_FILE, encoding="utf-8")
    return str(f)


@pytest.fixture
def skew_path(tmp_path):
    f = tmp_path / "rect.skew"
    f.write_text(SKEW_FILE, encoding="utf-8")
    return str(f)


def test_parse_poset_with_embedding():
    data = parse_input(DIAMOND_FILE)
    assert data.poset == corpus.diamond()
    assert data.embedding[2] == (Fraction(-1), Fraction(1))
    assert data.regions is None


def test_parse_regions_section():
    text = "poset\nn 4\ncovers\n1 3\n1 4\n2 3\n2 4\nregions\nmin: 1,2 max: 3,4\n"
    data = parse_input(text)
    assert data.regions[0].mins == frozenset({1, 2})
    assert data.regions[0].maxs == frozenset({3, 4})


def test_parse_skew():
    d = parse_input(SKEW_FILE)
    assert d.rows == ((1, 2), (1, 2))


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_input("")
    with pytest.raises(ParseError):
        parse_input("posetish\n")
    with pytest.raises(ParseError):
        parse_input("poset\ncovers\n1 2\n")  # n missing
    with pytest.raises(ParseError):
        parse_input("poset\nn 2\ncovers\n1\n")


def test_round_trip_byte_identical():
    text = serialize_poset(corpus.diamond(), corpus.diamond_embedding())
    again = serialize_poset(
        parse_input(text).poset, parse_input(text).embedding
    )
    assert text == again
    stext = serialize_skew(parse_input(SKEW_FILE))
    assert stext == SKEW_FILE


def test_cli_psi_planar(capsys, diamond_path):
    assert main(["psi", diamond_path, "--method", "planar"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "(x1 - x4) / ((x1 - x2)*(x1 - x3)*(x2 - x4)*(x3 - x4))"


def test_cli_psi_at(capsys, diamond_path):
    assert main(["psi", diamond_path, "--method", "oracle", "--at", "1,2,3,5"]) == 0
    assert capsys.readouterr().out.strip() == "-1/3"


def test_cli_sigma(capsys, diamond_path):
    assert main(["sigma", diamond_path, "--method", "planar", "--at", "1,2,3,5"]) == 0
    assert capsys.readouterr().out.strip() == "10"


def test_cli_verify_agrees(capsys, diamond_path):
    assert main(["verify", diamond_path]) == 0
    out = capsys.readouterr().out
    assert "psi methods: oracle general reduction planar admissible" in out
    assert "DIFF" not in out


def test_cli_verify_skew(capsys, skew_path):
    assert main(["verify", skew_path]) == 0
    out = capsys.readouterr().out
    assert "bflr" in out


def test_cli_rejects_bad_cover(tmp_path, capsys):
    f = tmp_path / "broken.poset"
    f.write_text("poset\nn 2\ncovers\n2 1\n", encoding="utf-8")
    assert main(["psi", str(f)]) == 2
    err = capsys.readouterr().err
    assert "NotNaturallyLabeled" in err


def test_cli_reduce_dump(capsys, diamond_path):
    assert main(["reduce", diamond_path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "1 beta^0 [prefactor: 1-4] edges: 1-2,1-3,3-4"
    assert len(lines) == 3


def test_cli_reduce_beta(capsys, diamond_path):
    assert main(["reduce", diamond_path, "--beta", "-1", "--at", "1,2,3,5"]) == 0
    assert capsys.readouterr().out.strip() == "10"
    assert main(["reduce", diamond_path, "--beta", "0", "--at", "1,2,3,5"]) == 0
    assert capsys.readouterr().out.strip() == "-1/3"


def test_cli_paths(capsys, skew_path):
    assert main(["paths", skew_path]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["1,1 1,2 2,2", "1,1 2,1 2,2"]


def test_cli_triangulate_poset(capsys, diamond_path):
    assert main(["triangulate", diamond_path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4  # four pieces, one tree each
    assert "1-2,1-3,1-4" in lines


def test_cli_triangulate_skew(capsys, skew_path):
    assert main(["triangulate", skew_path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2


def test_cli_notch(capsys, tmp_path):
    f = tmp_path / "vee.poset"
    f.write_text(serialize_poset(corpus.vee()), encoding="utf-8")
    assert main(["notch", str(f), "--check"]) == 0
    assert capsys.readouterr().out.strip() == "V 1 2 3 ok"


def test_cli_export_dot(capsys, tmp_path):
    f = tmp_path / "chain.poset"
    f.write_text(serialize_poset(corpus.chain(2)), encoding="utf-8")
    assert main(["export-dot", str(f)]) == 0
    out = capsys.readouterr().out
    assert out == "digraph {\n  1 -> 2;\n}\n"


def test_cli_corpus_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    assert main(["corpus", str(out1), "--seed", "1", "--nmax", "4", "--count", "3"]) == 0
    assert main(["corpus", str(out2), "--seed", "1", "--nmax", "4", "--count", "3"]) == 0
    files1 = sorted(out1.glob("*.poset"))
    files2 = sorted(out2.glob("*.poset"))
    assert [f.read_bytes() for f in files1] == [f.read_bytes() for f in files2]
    out3 = tmp_path / "c"
    assert main(["corpus", str(out3), "--seed", "2", "--nmax", "4", "--count", "3"]) == 0
    assert [f.read_bytes() for f in files1] != [
        f.read_bytes() for f in sorted(out3.glob("*.poset"))
    ]


def test_cli_bflr_requires_skew(capsys, diamond_path):
    assert main(["psi", diamond_path, "--method", "bflr"]) == 2
