import math
import random
from pathlib import Path

import pytest

from msel import (
    DataError,
    ParseError,
    SimGraph,
    dataset_stats,
    load_content_cites,
    pair_weight,
    parse_bridges,
    read_msg1,
    to_sim_graph,
    write_msg1,
)
from msel.dataio import _fmt_weight

from helpers import gnp_graph

DATA = Path(__file__).parent / "data"


def test_load_toy_dataset():
    raw = load_content_cites(DATA / "toy.content", DATA / "toy.cites")
    assert raw.ids == ("paper_a", "paper_b", "paper_c", "paper_d", "paper_e", "paper_f")
    assert raw.labels == ("theory", "theory", "systems", "systems", "ml", "ml")
    assert raw.features.shape == (6, 4)
    # kept verbatim, including the duplicate and the self cite;
    # only the line with the unknown id is dropped
    assert raw.cite_edges == (
        ("paper_a", "paper_b"),
        ("paper_a", "paper_c"),
        ("paper_b", "paper_a"),
        ("paper_c", "paper_c"),
        ("paper_e", "paper_f"),
        ("paper_d", "paper_e"),
        ("paper_d", "paper_f"),
    )
    assert raw.dropped_citations == 1
    assert (raw.n, raw.dim) == (6, 4)


def test_dataset_stats_counts():
    # duplicates and the self cite collapse in the structural view
    raw = load_content_cites(DATA / "toy.content", DATA / "toy.cites")
    assert dataset_stats(raw) == (6, 5, 4)


def test_to_sim_graph_weights_match_pair_weight():
    raw = load_content_cites(DATA / "toy.content", DATA / "toy.cites")
    g = to_sim_graph(raw)
    assert g.n == 6
    # paper_e and paper_f disagree on every feature: their edge weighs 0
    # and vanishes
    assert g.m == 4
    for u, v in [(0, 1), (0, 2), (3, 4), (3, 5)]:
        expect = pair_weight(raw.features[u], raw.features[v])
        assert math.isclose(g.weight(u, v), expect, rel_tol=1e-12)
    assert g.weight(4, 5) == 0.0


def test_duplicate_node_id_rejected(tmp_path):
    content = tmp_path / "dup.content"
    content.write_text("a 1 0 x\na 0 1 y\n", encoding="utf-8")
    (tmp_path / "dup.cites").write_text("", encoding="utf-8")
    with pytest.raises(DataError):
        load_content_cites(content, tmp_path / "dup.cites")


def test_ragged_feature_rows_rejected(tmp_path):
    content = tmp_path / "ragged.content"
    content.write_text("a 1 0 x\nb 1 y\n", encoding="utf-8")
    (tmp_path / "ragged.cites").write_text("", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_content_cites(content, tmp_path / "ragged.cites")
    assert "ragged.content" in str(err.value)
    assert "2" in str(err.value)


def test_bad_feature_value_rejected(tmp_path):
    content = tmp_path / "bad.content"
    content.write_text("a 1 oops x\n", encoding="utf-8")
    (tmp_path / "bad.cites").write_text("", encoding="utf-8")
    with pytest.raises(ParseError):
        load_content_cites(content, tmp_path / "bad.cites")


def test_malformed_cite_line_rejected(tmp_path):
    content = tmp_path / "c.content"
    content.write_text("a 1 x\nb 0 y\n", encoding="utf-8")
    cites = tmp_path / "c.cites"
    cites.write_text("a\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_content_cites(content, cites)
    assert "c.cites" in str(err.value)


# ---------------------------------------------------------------- msg1


def test_golden_file_byte_identical(tmp_path):
    raw = load_content_cites(DATA / "toy.content", DATA / "toy.cites")
    g = to_sim_graph(raw)
    out = tmp_path / "out.msg1"
    write_msg1(g, out)
    assert out.read_bytes() == (DATA / "golden.msg1").read_bytes()


def test_golden_file_reads_back():
    g = read_msg1(DATA / "golden.msg1")
    assert (g.n, g.m) == (6, 4)
    assert math.isclose(g.weight(0, 1), math.sqrt(3) / 2, rel_tol=1e-15)
    assert g.weight(3, 4) == 0.5


def test_round_trip_is_bit_exact(tmp_path):
    rng = random.Random(99)
    for k in range(10):
        g = gnp_graph(rng, rng.randint(1, 15))
        path = tmp_path / f"rt{k}.msg1"
        write_msg1(g, path)
        h = read_msg1(path)
        assert h.n == g.n and h.m == g.m
        for u, v, w in g.edges():
            assert h.weight(u, v) == w  # exact, not approximate


def test_fmt_weight_keeps_six_significant_digits():
    assert _fmt_weight(0.5) == "0.500000"
    assert _fmt_weight(1.0) == "1.00000"
    assert _fmt_weight(0.8660254037844386) == "0.8660254037844386"
    for w in [0.1, 0.123456, 1 / 3, 2 ** -20, 0.9999999]:
        txt = _fmt_weight(w)
        assert float(txt) == w
        digits = txt.replace(".", "").lstrip("0")
        assert len(digits) >= 6


def test_read_rejects_bad_magic(tmp_path):
    p = tmp_path / "bad.msg1"
    p.write_text("MSG2\n1 0\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_msg1(p)


def test_read_rejects_bad_header(tmp_path):
    for header in ["1", "a b", "-1 0", "1 -2"]:
        p = tmp_path / "h.msg1"
        p.write_text(f"MSG1\n{header}\n", encoding="utf-8")
        with pytest.raises(ParseError):
            read_msg1(p)


def test_read_rejects_wrong_edge_count(tmp_path):
    p = tmp_path / "few.msg1"
    p.write_text("MSG1\n3 2\n0 1 0.5\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_msg1(p)
    p.write_text("MSG1\n3 1\n0 1 0.5\n1 2 0.5\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_msg1(p)


def test_read_rejects_bad_endpoints_and_weights(tmp_path):
    cases = [
        "MSG1\n3 1\n1 0 0.5\n",      # u >= v
        "MSG1\n3 1\n0 0 0.5\n",      # self loop
        "MSG1\n3 1\n0 3 0.5\n",      # v out of range
        "MSG1\n3 1\n0 1 0.0\n",      # weight must be positive
        "MSG1\n3 1\n0 1 1.5\n",      # weight above one
        "MSG1\n3 1\n0 1 nope\n",
    ]
    for text in cases:
        p = tmp_path / "e.msg1"
        p.write_text(text, encoding="utf-8")
        with pytest.raises(ParseError):
            read_msg1(p)


def test_read_rejects_duplicate_edge(tmp_path):
    p = tmp_path / "dup.msg1"
    p.write_text("MSG1\n3 2\n0 1 0.5\n0 1 0.6\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_msg1(p)


def test_read_empty_file(tmp_path):
    p = tmp_path / "empty.msg1"
    p.write_text("", encoding="utf-8")
    with pytest.raises(ParseError):
        read_msg1(p)


def test_read_skips_comments_and_blanks(tmp_path):
    p = tmp_path / "c.msg1"
    p.write_text("# made by hand\nMSG1\n\n2 1\n# the only edge\n0 1 0.25\n", encoding="utf-8")
    g = read_msg1(p)
    assert (g.n, g.m) == (2, 1)
    assert g.weight(0, 1) == 0.25


def test_write_zero_node_graph(tmp_path):
    p = tmp_path / "zero.msg1"
    write_msg1(SimGraph(0, []), p)
    assert read_msg1(p).n == 0


# ---------------------------------------------------------------- bridges


def test_parse_bridges_golden(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("# base extra weight\n0 2 0.5\n\n3 0 0.125\n", encoding="utf-8")
    assert parse_bridges(p) == [(0, 2, 0.5), (3, 0, 0.125)]


def test_parse_bridges_errors(tmp_path):
    for text in ["0 1\n", "0 1 2 3\n", "a 1 0.5\n", "0 1 0.0\n", "0 1 1.5\n", "-1 0 0.5\n"]:
        p = tmp_path / "b.txt"
        p.write_text(text, encoding="utf-8")
        with pytest.raises(ParseError):
            parse_bridges(p)


def test_missing_files_give_clear_errors(tmp_path):
    with pytest.raises(ParseError):
        read_msg1(tmp_path / "nope.msg1")
    with pytest.raises(ParseError):
        load_content_cites(tmp_path / "nope.content", tmp_path / "nope.cites")
    with pytest.raises(ParseError):
        parse_bridges(tmp_path / "nope.txt")


# ---------------------------------------------------------------- pipeline


def test_full_convert_pipeline_knn(tmp_path):
    raw = load_content_cites(DATA / "toy.content", DATA / "toy.cites")
    g = to_sim_graph(raw, mode="knn", k=2)
    assert g.n == 6
    out = tmp_path / "knn.msg1"
    write_msg1(g, out)
    h = read_msg1(out)
    assert h.m == g.m
