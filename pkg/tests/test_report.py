import json

from cisgraphs.families import complete_bipartite, cycle, path, q_graph
from cisgraphs.report import graph_record, parse_text_records, render


def test_q5_record():
    rec = graph_record(q_graph(5), "Q:5", want_vt=True)
    assert rec["order"] == 20 and rec["valency"] == 7
    assert (rec["alpha"], rec["omega"]) == (5, 4)
    assert rec["cis"] and rec["vertex_transitive"] and rec["irreducible"]
    assert "chi" not in rec and "seconds" not in rec


def test_negative_flags_carry_witnesses():
    rec = graph_record(path(4))
    assert rec["cis"] is False
    assert rec["cis_witness_clique"] == "{1,2}" and rec["cis_witness_stable"] == "{0,3}"
    rec = graph_record(complete_bipartite(2, 3))
    assert rec["cis"] and not rec["well_covered"] and "well_covered_witness" in rec


def test_limit_surfaces_per_field():
    rec = graph_record(cycle(9), limit=2)
    assert rec["alpha"] == "exceeded:EnumerationLimitExceeded"
    assert rec["cis"] == "exceeded:EnumerationLimitExceeded"
    assert rec["connected"] is True


def test_rendering_is_parseable_and_deterministic():
    rec = graph_record(cycle(6), "c6", want_chi=True)
    text = render(rec, "text")
    assert text.endswith("\n\n")
    assert text == render(graph_record(cycle(6), "c6", want_chi=True), "text")
    (parsed,) = parse_text_records(text)
    assert parsed["id"] == "c6" and parsed["cis"] == "false" and parsed["chi"] == "2"
    assert json.loads(render(rec, "jsonl"))["order"] == 6
