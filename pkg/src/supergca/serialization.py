"""JSON interchange for algebras and verification reports.

Coefficients travel as exact rational strings (``"3"``, ``"-1/2"``); a
decimal point anywhere is rejected.  Output is canonical: generators in
algebra order, brackets sorted by generator position, keys sorted, so
export -> import -> export is byte-stable.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .builders import d_weight
from .core import (
    AlgebraError, Central, Element, Family, Generator, Superalgebra,
    ViolationReport, rational,
)
from .oscillator import OscExpr

SCHEMA_VERSION = 1
_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def format_rational(c) -> str:
    return str(Fraction(c))


def parse_rational(s: str) -> int | Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise AlgebraError(f"coefficient {s!r} is not an exact rational string")
    q = Fraction(s)
    return rational(q)


def _dump(doc: Mapping) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _element_terms(alg: Superalgebra, v: Element) -> list[dict]:
    order = alg.index
    return [{"generator": g.label, "coefficient": format_rational(c)}
            for g, c in sorted(v.items(), key=lambda gc: order.get(gc[0], len(order)))]


# ---------------------------------------------------------------------------
# algebra documents
# ---------------------------------------------------------------------------

def algebra_to_dict(alg: Superalgebra) -> dict[str, Any]:
    builtin = alg.family is not None
    spec = None
    if builtin:
        spec = {"family": alg.family.value, "d": alg.d,
                "twice_ell": alg.two_ell, "central": alg.central.value}
    gens = [{"name": g.name, "indices": list(g.indices), "parity": g.parity,
             "d_weight": d_weight(g, alg.two_ell) if builtin else None}
            for g in alg.generators]
    pos = alg.index
    brackets = [{"left": a.label, "right": b.label, "result": _element_terms(alg, v)}
                for (a, b), v in sorted(alg.table.items(),
                                        key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))]
    return {"schema_version": SCHEMA_VERSION, "spec": spec,
            "generators": gens, "brackets": brackets}


def export_algebra(alg: Superalgebra) -> str:
    return _dump(algebra_to_dict(alg))


def _field(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise AlgebraError(f"missing field {key!r}")
    v = obj[key]
    if kind is int and isinstance(v, bool) or not isinstance(v, kind):
        raise AlgebraError(f"field {key!r} has the wrong type")
    return v


def algebra_from_dict(doc: Mapping[str, Any]) -> Superalgebra:
    """Rebuild an algebra from its document, exactly as written.

    The table is taken from the document, never regenerated from the
    spec, so a hand-edited document is verified as given.
    """
    if _field(doc, "schema_version", int) != SCHEMA_VERSION:
        raise AlgebraError(f"unsupported schema version {doc['schema_version']!r}")
    spec = doc.get("spec")
    meta: dict[str, Any] = {}
    if spec is not None:
        try:
            meta = {"family": Family(_field(spec, "family", str)),
                    "d": _field(spec, "d", int),
                    "two_ell": _field(spec, "twice_ell", int),
                    "central": Central(_field(spec, "central", str))}
        except ValueError as exc:
            raise AlgebraError(str(exc)) from None
    gens, by_label = [], {}
    for entry in _field(doc, "generators", list):
        parity = _field(entry, "parity", int)
        if parity not in (0, 1):
            raise AlgebraError(f"parity must be 0 or 1, got {parity!r}")
        indices = _field(entry, "indices", list)
        if not all(isinstance(k, int) and not isinstance(k, bool) for k in indices):
            raise AlgebraError("generator indices must be integers")
        g = Generator(_field(entry, "name", str), tuple(indices), odd=bool(parity))
        if g.label in by_label:
            raise AlgebraError(f"duplicate generator {g.label}")
        by_label[g.label] = g
        gens.append(g)

    def lookup(label):
        if label not in by_label:
            raise AlgebraError(f"bracket names unknown generator {label!r}")
        return by_label[label]

    table = {}
    for entry in _field(doc, "brackets", list):
        a = lookup(_field(entry, "left", str))
        b = lookup(_field(entry, "right", str))
        terms = {}
        for t in _field(entry, "result", list):
            g = lookup(_field(t, "generator", str))
            if g in terms:
                raise AlgebraError(f"repeated term {g.label} in [{a.label}, {b.label}]")
            terms[g] = parse_rational(_field(t, "coefficient", str))
        if (a, b) in table:
            raise AlgebraError(f"bracket [{a.label}, {b.label}] listed twice")
        table[(a, b)] = Element(terms)
    return Superalgebra(gens, table, **meta)


def import_algebra(text: str) -> Superalgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"malformed document: {exc}") from None
    return algebra_from_dict(doc)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _residual(alg: Superalgebra | None, r) -> Any:
    if isinstance(r, Element):
        if alg is None:
            return [{"generator": g.label, "coefficient": format_rational(c)}
                    for g, c in sorted(r.items(), key=lambda gc: gc[0].label)]
        return _element_terms(alg, r)
    if isinstance(r, OscExpr):
        return repr(r)
    return str(r)


def check_entry(name: str, report: ViolationReport, alg: Superalgebra | None = None,
                **extra) -> dict[str, Any]:
    """One check of a report: status plus canonically ordered violations."""
    entry = {"name": name, "status": "pass" if report.empty else "fail",
             "violations": [{"kind": v.kind,
                             "witnesses": [g.label for g in v.witnesses],
                             "residual": _residual(alg, v.residual)}
                            for v in report]}
    entry.update(extra)
    return entry


def report_document(command: str, checks: list[dict], subject: Mapping | None = None,
                    timing: Mapping[str, float] | None = None) -> dict[str, Any]:
    """Assemble a report.  ``timing`` is only included when given."""
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "subject": subject,
           "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
           "checks": checks}
    if timing is not None:
        doc["timing"] = {k: round(v, 6) for k, v in timing.items()}
    return doc


def export_report(doc: Mapping) -> str:
    return _dump(doc)
