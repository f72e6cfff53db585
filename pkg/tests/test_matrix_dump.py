import pytest

from algebra.ideal import maximal_ideal
from helpers import stabind_ideal
from polyhedra.linsys import build_colon_system, build_sat_system
from polyhedra.matrix_dump import DumpFormatError, dumps, loads, read_dump, write_dump


def test_dump_layout():
    text = dumps(build_sat_system(maximal_ideal(2), 3))
    lines = text.splitlines()
    assert lines[0] == "sat 6 7 4 2 3"
    assert lines[1] == "1 0 0 0 -1 0 0"
    assert lines[-1] == "3 0 0 0 3 0"
    assert len(lines) == 8


def test_file_round_trip(tmp_path):
    sys = build_colon_system(stabind_ideal())
    path = tmp_path / "colon.txt"
    write_dump(sys, path)
    assert read_dump(path) == sys


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("cone 1 1 0 0\n1\n0\n", 1),
        ("generic 2 1 0 0\n1\n0 0\n", 3),
        ("generic 1 2 0 0\n1 x\n0\n", 2),
        ("generic 1 2 0 0\n1 2 3\n0\n", 2),
        ("generic 1 1 0 0\n1\n-1\n", 1),
        ("power 3 5 2 2\n1 0 -1 0 0\n0 1 0 -1 0\n-1 -1 0 0 1\n1 0 0\n", 1),
    ],
)
def test_malformed_dumps(text, line):
    with pytest.raises(DumpFormatError) as info:
        loads(text)
    assert info.value.line == line


def test_binary_file_is_a_format_error(tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"\xff\xfe\x00garbage")
    with pytest.raises(DumpFormatError) as info:
        read_dump(path)
    assert info.value.line == 1
