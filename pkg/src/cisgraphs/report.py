"""Per-graph property records, rendered as key=value text or JSON lines.

Every negative verdict that carries a witness is re-checked against the
graph before it is rendered; a witness that fails the re-check is a bug
and raises ``AssertionError`` rather than being printed.
"""

from __future__ import annotations

import json
import time
from typing import Any, Callable, Optional

from .enumeration import (
    CLIQUES,
    STABLE_SETS,
    DEFAULT_LIMIT,
    chromatic_number,
    clique_number,
    is_cis,
    is_co_well_covered,
    is_well_covered,
    stability_number,
    verify_cis_certificate,
    verify_cover_witness,
)
from .errors import BudgetError, CisGraphError
from .graph import Graph, bits, graph6_encode, is_connected
from .reduction import is_irreducible
from .symmetry import DEFAULT_BUDGET, is_vertex_transitive

Record = dict[str, Any]


def fmt_set(s: int) -> str:
    return "{" + ",".join(map(str, bits(s))) + "}"


def _field(rec: Record, key: str, fn: Callable[[], Any]) -> Any:
    # budget and limit failures are reported in place of the value
    try:
        value = fn()
    except BudgetError as e:
        rec[key] = f"exceeded:{type(e).__name__}"
        return None
    except CisGraphError as e:
        rec[key] = f"error:{type(e).__name__}"
        return None
    rec[key] = value
    return value


def graph_record(g: Graph, ident: str = "", *, limit: int = DEFAULT_LIMIT,
                 budget: int = DEFAULT_BUDGET, want_vt: bool = False,
                 want_chi: bool = False, timing: bool = False) -> Record:
    start = time.perf_counter()
    rec: Record = {"id": ident or graph6_encode(g).decode(), "order": g.order}
    degrees = set(g.degrees())
    rec["regular"] = len(degrees) <= 1
    if rec["regular"] and g.order:
        rec["valency"] = next(iter(degrees))
    _field(rec, "alpha", lambda: stability_number(g, limit))
    _field(rec, "omega", lambda: clique_number(g, limit))
    rec["connected"] = is_connected(g)
    rec["irreducible"] = is_irreducible(g)

    wc = _field(rec, "well_covered", lambda: is_well_covered(g, limit))
    if wc is not None:
        rec["well_covered"] = wc.holds
        if not wc.holds:
            if not verify_cover_witness(g, wc, STABLE_SETS):
                raise AssertionError("well-covered witness failed re-verification")
            rec["well_covered_witness"] = f"{fmt_set(wc.first)} {fmt_set(wc.second)}"
    cwc = _field(rec, "co_well_covered", lambda: is_co_well_covered(g, limit))
    if cwc is not None:
        rec["co_well_covered"] = cwc.holds
        if not cwc.holds:
            if not verify_cover_witness(g, cwc, CLIQUES):
                raise AssertionError("co-well-covered witness failed re-verification")
            rec["co_well_covered_witness"] = f"{fmt_set(cwc.first)} {fmt_set(cwc.second)}"
    cert = _field(rec, "cis", lambda: is_cis(g, limit))
    if cert is not None:
        rec["cis"] = cert.is_cis
        if not cert.is_cis:
            if not verify_cis_certificate(g, cert):
                raise AssertionError("CIS witness failed re-verification")
            rec["cis_witness_clique"] = fmt_set(cert.clique)
            rec["cis_witness_stable"] = fmt_set(cert.stable_set)
    if want_vt:
        _field(rec, "vertex_transitive", lambda: is_vertex_transitive(g, budget))
    if want_chi:
        _field(rec, "chi", lambda: chromatic_number(g, limit=limit))
    if timing:
        rec["seconds"] = round(time.perf_counter() - start, 6)
    return rec


def _text_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(rec: Record) -> str:
    return "".join(f"{k}={_text_value(v)}\n" for k, v in rec.items())


def render_jsonl(rec: Record) -> str:
    return json.dumps(rec, ensure_ascii=False) + "\n"


def render(rec: Record, fmt: Optional[str]) -> str:
    """``jsonl`` gives one JSON object per line; anything else gives a text
    record followed by a blank separator line."""
    if fmt == "jsonl":
        return render_jsonl(rec)
    return render_text(rec) + "\n"


def parse_text_records(text: str) -> list[dict[str, str]]:
    out = []
    for block in text.split("\n\n"):
        rec = {}
        for line in block.splitlines():
            if "=" in line:
                k, v = line.split("=", 1)
                rec[k] = v
        if rec:
            out.append(rec)
    return out
