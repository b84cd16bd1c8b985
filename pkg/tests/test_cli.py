from fractions import Fraction as F

import pytest

from tpbessel.bidiagonal import from_bdf, validate
from tpbessel.cli import main


def run(args):
    return main(list(args))


def test_gen_bd_bessel_two_nodes(tmp_path):
    out = tmp_path / "m.bdf"
    assert run(["gen-bd", "--basis", "bessel", "--nodes", "1,2",
                "--out", str(out)]) == 0
    bd = from_bdf(out.read_text())
    assert bd.data == [[F(1), F(2)], [F(1), F(1)]]
    assert validate(bd) == []


def test_gen_bd_monomial(tmp_path):
    out = tmp_path / "v.bdf"
    assert run(["gen-bd", "--basis", "monomial", "--nodes", "1,2,3",
                "--out", str(out)]) == 0
    bd = from_bdf(out.read_text())
    assert [[int(x) for x in r] for r in bd.data] == [
        [1, 1, 1], [1, 1, 2], [1, 1, 2]]


def test_gen_bd_invalid_nodes():
    assert run(["gen-bd", "--nodes", "2,1"]) == 2


def test_gen_bd_missing_nodes():
    assert run(["gen-bd", "--basis", "bessel"]) == 2


@pytest.fixture
def bdf_2x2(tmp_path):
    path = tmp_path / "m.bdf"
    assert run(["gen-bd", "--basis", "bessel", "--nodes", "1,2",
                "--out", str(path)]) == 0
    return path


def test_eig(tmp_path, bdf_2x2):
    out = tmp_path / "eig.csv"
    assert run(["eig", str(bdf_2x2), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "index,value,achieved_bits"
    vals = [float(ln.split(",")[1]) for ln in lines[1:]]
    assert vals == pytest.approx([3.7320508075688772, 0.2679491924311227],
                                 rel=1e-15)


def test_svd(tmp_path, bdf_2x2):
    out = tmp_path / "svd.csv"
    assert run(["svd", str(bdf_2x2), "--out", str(out)]) == 0
    vals = [float(ln.split(",")[1])
            for ln in out.read_text().splitlines()[1:]]
    assert vals[0] > vals[1] > 0


def test_inv(tmp_path, bdf_2x2):
    out = tmp_path / "inv.csv"
    assert run(["inv", str(bdf_2x2), "--out", str(out)]) == 0
    assert out.read_text() == "3,-2\n-1,1\n"


def test_solve(tmp_path, bdf_2x2):
    rhs = tmp_path / "b.txt"
    rhs.write_text("1 -1\n")
    out = tmp_path / "x.csv"
    assert run(["solve", str(bdf_2x2), "--rhs", str(rhs),
                "--out", str(out)]) == 0
    assert out.read_text() == "index,value\n1,5\n2,-2\n"


def test_malformed_bdf(tmp_path):
    bad = tmp_path / "bad.bdf"
    bad.write_text("nonsense\n")
    assert run(["eig", str(bad)]) == 2


def test_invalid_bd_content(tmp_path):
    bad = tmp_path / "bad.bdf"
    bad.write_text("BDF1 2\n0 0\n0 0\n")
    assert run(["eig", str(bad)]) == 2


def test_table_deterministic(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(["table", "--id", "4", "--seed", "7", "--out", str(a)]) == 0
    assert run(["table", "--id", "4", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "i,reference,relerr_hra,relerr_naive"
    assert len(lines) == 21


def test_figure_writes_csv_and_svg(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["figure", "--id", "val", "--n-max", "4",
                "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,quantity,relerr_hra,relerr_naive"
    assert len(lines) == 1 + 2 * 3
    svg = (tmp_path / "sweep.svg").read_text()
    assert svg.startswith("<svg") and "polyline" in svg


def test_figure_bad_id():
    with pytest.raises(SystemExit):
        run(["figure", "--id", "bogus"])
