"""Named graph predicates and the tiny ``&`` / ``!`` expression language used by
``cisgraphs enumerate``.

An expression is a conjunction of terms separated by ``&`` (or ``∧``); each
term is a predicate name, optionally negated by a leading ``!`` (or ``¬``).
Numeric terms compare ``alpha``, ``omega``, ``order`` or ``valency`` with
``=``, ``<=``, ``>=``, ``<`` or ``>``, e.g. ``omega<=2``.
"""

from __future__ import annotations

import operator
import re
from typing import Callable

from .enumeration import (
    clique_number,
    is_cis,
    is_co_well_covered,
    is_well_covered,
    near_clique_pair,
    p4_property,
    stability_number,
)
from .errors import BadParameter
from .graph import Graph, complement, is_connected
from .reduction import is_irreducible
from .symmetry import is_vertex_transitive

Predicate = Callable[[Graph], bool]


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) == 1


def is_complete_bipartite(g: Graph) -> bool:
    """Connected, and the complement is a disjoint union of exactly two cliques."""
    if g.order < 2 or not is_connected(g):
        return False
    h = complement(g)
    sides = []
    seen = 0
    for v in range(g.order):
        if seen >> v & 1:
            continue
        side = h.adj[v] | (1 << v)
        if not h.is_clique(side):
            return False
        sides.append(side)
        seen |= side
    return len(sides) == 2


NAMED: dict[str, Predicate] = {
    "true": lambda g: True,
    "connected": is_connected,
    "coconnected": lambda g: is_connected(complement(g)),
    "cis": lambda g: is_cis(g).is_cis,
    "well-covered": lambda g: is_well_covered(g).holds,
    "co-well-covered": lambda g: is_co_well_covered(g).holds,
    "irreducible": is_irreducible,
    "co-irreducible": lambda g: is_irreducible(complement(g)),
    "regular": is_regular,
    "vt": is_vertex_transitive,
    "complete-bipartite": is_complete_bipartite,
    "no-near-cliques": lambda g: near_clique_pair(g) is None,
    "p4": lambda g: p4_property(g)[0],
}

_MEASURES: dict[str, Callable[[Graph], int]] = {
    "alpha": stability_number,
    "omega": clique_number,
    "order": lambda g: g.order,
    "valency": lambda g: max(g.degrees()),
}

_COMPARE = {"=": operator.eq, "<=": operator.le, ">=": operator.ge,
            "<": operator.lt, ">": operator.gt}

_NUMERIC = re.compile(r"^(alpha|omega|order|valency)\s*(<=|>=|=|<|>)\s*(\d+)$")


def _term(text: str) -> Predicate:
    text = text.strip()
    negate = False
    while text[:1] in ("!", "¬"):
        negate = not negate
        text = text[1:].strip()
    m = _NUMERIC.match(text)
    if m:
        measure, cmp, bound = _MEASURES[m[1]], _COMPARE[m[2]], int(m[3])
        base: Predicate = lambda g: cmp(measure(g), bound)
    elif text in NAMED:
        base = NAMED[text]
    else:
        raise BadParameter(f"unknown predicate term {text!r}; known: {', '.join(NAMED)}")
    if negate:
        return lambda g: not base(g)
    return base


def parse_predicate(expr: str) -> Predicate:
    terms = [t for t in re.split(r"&|∧", expr) if t.strip()]
    if not terms:
        raise BadParameter("empty predicate expression")
    preds = [_term(t) for t in terms]
    return lambda g: all(p(g) for p in preds)
