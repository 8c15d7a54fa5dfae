"""Character JSON schema.

A character document looks like::

    {
      "type": "D4",
      "orbits": ["a"],
      "highest": "2_0",
      "terms": [
        {"monomial": "1_1 2_2^-1 3_1 4_1",
         "w": {"2_0": 1},
         "v": {"2_1": 1},
         "coeff": [[0, 1]]},
        ...
      ]
    }

``coeff`` is the list of [t-exponent, coefficient] pairs sorted by
exponent; ``w``/``v`` use the same ``i_n[@orbit]`` key syntax as monomial
factors.  Terms are sorted by lowering degree, then canonical monomial
order, so serialization is byte-stable.  Round-trips are bit-exact.
"""

from __future__ import annotations

import json
import re

from .charalg import Character, Monomial, parse_monomial, render_monomial
from .errors import ParseError
from .rootdata import parse_type
from .tpoly import TPoly

_KEY_RE = re.compile(r"^(\d+)_(-?\d+)(?:@([A-Za-z][A-Za-z0-9]*))?$")


def _render_map(table: dict) -> dict:
    out = {}
    for (orbit, node, shift), mult in sorted(table.items()):
        tag = f"{node}_{shift}" + (f"@{orbit}" if orbit != "a" else "")
        out[tag] = mult
    return out


def _parse_map(doc: dict) -> dict:
    out = {}
    for tag, mult in doc.items():
        m = _KEY_RE.match(tag)
        if not m:
            raise ParseError(f"malformed exponent key {tag!r}")
        orbit = m.group(3) or "a"
        out[(orbit, int(m.group(1)), int(m.group(2)))] = int(mult)
    return out


def character_to_doc(chi: Character, annotations: dict | None = None) -> dict:
    doc = {
        "type": f"{chi.datum.family}{chi.datum.rank}",
        "orbits": chi.orbits(),
        "highest": render_monomial(chi.highest.y),
        "terms": [],
    }
    for m, coeff in chi.sorted_terms():
        term = {
            "monomial": render_monomial(m.y),
            "w": _render_map(m.w),
            "v": _render_map(m.v),
            "coeff": [[e, c] for e, c in coeff.pairs()],
        }
        if annotations is not None and m in annotations:
            profile = annotations[m]
            term["jordan"] = {
                "n": profile.n,
                "blocks": list(profile.blocks),
                "graded": list(profile.graded),
            }
        doc["terms"].append(term)
    return doc


def character_from_doc(doc: dict) -> Character:
    datum = parse_type(doc["type"])
    terms = {}
    highest = None
    for entry in doc["terms"]:
        if "w" not in entry or "v" not in entry:
            raise ParseError(
                f"term {entry.get('monomial')!r} is missing w/v payload")
        m = Monomial(datum, _parse_map(entry["w"]), _parse_map(entry["v"]))
        stated = parse_monomial(entry["monomial"], datum)
        if m.y != stated:
            raise ParseError(
                f"term {entry['monomial']!r}: stated monomial does not match "
                f"its (w, v) payload, which yields {render_monomial(m.y)!r}")
        terms[m] = TPoly.from_pairs(entry["coeff"])
        if not m.v:
            highest = m
    if highest is None:
        raise ParseError("character document has no monomial with v = 0")
    stated_highest = parse_monomial(doc["highest"], datum)
    if highest.y != stated_highest:
        raise ParseError("stated highest monomial is not the v = 0 term")
    return Character(datum, highest, terms)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
