"""JSON file formats for instances, solutions, certificates and reports.

Integers and rationals are written as decimal strings so that arbitrarily
large values survive a round trip unchanged. Output is deterministic:
``json.dumps(..., indent=2)`` plus a trailing newline.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from . import problems as P
from .core import Assignment, Bipartition, Clustering, PointMatrix, SqrtCoord, WeightedGraph
from .errors import ValidationError
from .problems import Clause, EuclideanInstance, NaeFormula, ProblemKind


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def digest(doc: Any) -> str:
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def rat_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    num, _, den = str(text).partition("/")
    return Fraction(int(num), int(den or 1))


def _int(text) -> int:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValidationError(f"expected an integer string, got {text!r}")
    return int(text)


# -- instances -------------------------------------------------------------


def instance_to_json(kind: ProblemKind, instance) -> dict:
    doc: dict[str, Any] = {"problem": kind.tag.value, "n": P.size_of(kind, instance)}
    if kind.is_kmeans:
        doc["k"] = kind.k
    if kind.is_nae:
        doc["clauses"] = [{"lits": list(c.lits), "w": str(c.weight)} for c in instance.clauses]
        return doc
    g = P.graph_of(instance)
    doc["edges"] = [[u, v, str(w)] for u, v, w in g.edges() if w != 0]
    doc["explicit_zero_edges"] = [[u, v] for u, v in g.explicit_zero_edges()]
    if isinstance(instance, EuclideanInstance) and instance.witness is not None:
        doc["witness"] = {"rows": [
            [{"s": e.sign, "num": str(e.radicand.numerator), "den": str(e.radicand.denominator)} for e in row]
            for row in instance.witness.rows
        ]}
    return doc


def kind_from_json(doc: dict) -> ProblemKind:
    try:
        tag = P.Tag(doc["problem"])
    except (KeyError, ValueError) as exc:
        raise ValidationError(f"unknown or missing problem tag: {doc.get('problem')!r}") from exc
    return ProblemKind(tag, int(doc["k"]) if tag is P.Tag.KMEANS else None)


def instance_from_json(doc: dict):
    """Parse an instance document; returns ``(kind, instance)``."""
    kind = kind_from_json(doc)
    try:
        n = int(doc["n"])
        if kind.is_nae:
            clauses = tuple(Clause(tuple(c["lits"]), _int(c["w"])) for c in doc.get("clauses", []))
            return kind, NaeFormula(n, clauses)
        edges = [(int(u), int(v), _int(w)) for u, v, w in doc.get("edges", [])]
        edges += [(int(u), int(v), 0) for u, v in doc.get("explicit_zero_edges", [])]
        g = WeightedGraph(n, edges)
        wit = doc.get("witness")
        if wit is not None:
            rows = tuple(
                tuple(SqrtCoord(int(e["s"]), Fraction(int(e["num"]), int(e["den"]))) for e in row)
                for row in wit["rows"]
            )
            return kind, EuclideanInstance(g, PointMatrix(rows))
        if kind.is_kmeans or kind.tag in P.EUCLID_TAGS:
            return kind, EuclideanInstance(g)
        return kind, g
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed instance document: {exc}") from exc


def save_instance(path: str, kind: ProblemKind, instance) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(instance_to_json(kind, instance)))


def load_instance(path: str):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_json(doc)


# -- solutions -------------------------------------------------------------


def solution_to_json(kind: ProblemKind, solution) -> dict:
    return {"problem": kind.tag.value, "assignment": list(P.labels(solution))}


def solution_from_json(doc: dict, kind: ProblemKind, n: int | None = None):
    values = doc.get("assignment")
    if not isinstance(values, list):
        raise ValidationError("solution document needs an 'assignment' list")
    if n is not None and len(values) != n:
        raise ValidationError(f"assignment has length {len(values)}, expected {n}")
    if not kind.is_kmeans and any(v not in (0, 1) for v in values):
        raise ValidationError("two-sided assignments hold only 0 and 1")
    return P.from_labels(kind, [int(v) for v in values])


# -- certificates ----------------------------------------------------------

_INT_OPTIONS = {"L", "M", "matching_size", "scale", "matching_weight", "C"}


def _plain(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return rat_str(x)
    if isinstance(x, ProblemKind):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _options_from_json(doc: dict) -> dict:
    out = {}
    for k, v in doc.items():
        out[k] = int(v) if k in _INT_OPTIONS and v is not None and v != "M" else v
    return out


def cert_to_json(cert) -> dict:
    from .reductions import ChainCert

    stages = cert.stages if isinstance(cert, ChainCert) else [cert]
    return {
        "path": [c.rid for c in stages],
        "source": instance_to_json(cert.kind_from, cert.source),
        "stages": [{"rid": c.rid, "from": str(c.kind_from), "to": str(c.kind_to),
                    "options": _plain(c.options), "params": _plain(c.params)} for c in stages],
        "target": instance_to_json(cert.kind_to, cert.target),
    }


def cert_from_json(doc: dict):
    """Rebuild a certificate by replaying the recorded reductions.

    The replayed target must match the stored one exactly.
    """
    from .reductions import chain_reduce

    kind, source = instance_from_json(doc["source"])
    options = {s["rid"]: _options_from_json(s.get("options", {})) for s in doc["stages"]}
    _, cert = chain_reduce(kind, source, list(doc["path"]), options)
    if instance_to_json(cert.kind_to, cert.target) != doc["target"]:
        raise ValidationError("certificate target does not match its replayed construction")
    return cert
