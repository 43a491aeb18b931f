import pytest
from hypothesis import given, settings, strategies as st

from utsw.errors import GraphFormatError
from utsw.io import format_graph, format_labels, parse_graph, parse_labels, read_graph, write_graph
from utsw.labeling import label_graph
from utsw.model import generate_torus, generate_utsw


@given(st.integers(3, 15), st.integers(0, 2**64 - 1))
@settings(max_examples=25, deadline=None)
def test_graph_roundtrip(n, seed):
    text = format_graph(generate_utsw(n, seed))
    g = parse_graph(text)
    assert g.seed == seed
    assert format_graph(g) == text


def test_graph_file_roundtrip(tmp_path):
    g = generate_utsw(9, 4)
    p = tmp_path / "g.txt"
    write_graph(g, str(p))
    assert read_graph(str(p)).adj == g.adj
    assert p.read_bytes() == format_graph(read_graph(str(p))).encode()


def test_graph_lines_sorted_by_ids():
    text = format_graph(generate_utsw(12, 0))
    pairs = [tuple(map(int, l.split()[:2])) for l in text.splitlines()[1:]]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


def test_torus_seed_written_as_minus_one():
    text = format_graph(generate_torus(3))
    assert text.startswith("utsw 3 -1\n")
    assert parse_graph(text).seed is None


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("utsw 2 7\n", 1),
    ("graph 5 1\n", 1),
    ("utsw x 1\n", 1),
    ("utsw 3 1\n0 9 L\n", 2),
    ("utsw 3 1\n0 1 L\n0 1 R\n", 3),
    ("utsw 3 1\n0 2 L\n0 1 L\n", 3),
    ("utsw 3 1\n1 0 L\n", 2),
    ("utsw 3 1\n0 1 X\n", 2),
    ("utsw 3 1\n0 1\n", 2),
    ("utsw 3 1\n0 a L\n", 2),
])
def test_graph_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.lineno == line
    assert str(err.value).startswith(f"line {line}:")


def test_label_roundtrip():
    g = generate_utsw(12, 3)
    lab = label_graph(g.view(), 3)
    text = format_labels(lab)
    back = parse_labels(text)
    assert back.labels == lab.labels
    assert format_labels(back) == text


def test_unlabeled_rows_are_empty():
    g = generate_torus(5)
    lab = label_graph(g, 0)
    lab.labels[7] = None
    text = format_labels(lab)
    assert "\n7,,\n" in text
    assert parse_labels(text).labels[7] is None


@pytest.mark.parametrize("text", [
    "v,x,y\n",
    "vertex,x,y\n0,0,0\n",
    "vertex,x,y\n" + "".join(f"{v},0,0\n" for v in range(24)) + "24,5,0\n",
    "vertex,x,y\n" + "".join(f"{v},0,0\n" for v in range(23)) + "24,0,0\n23,0,0\n",
    "vertex,x,y\n" + "".join(f"{v},0,0\n" for v in range(24)) + "24,1,\n",
])
def test_label_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_labels(text)
