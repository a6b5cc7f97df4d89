"""JSON schemas for complexes, certificates, and reports.

All files carry a versioned "schema" field.  Certificates are proof
objects meant to outlive the binary, so their encoding is fully explicit:
signed vertices serialize as [label, "+"] or [label, "-"].
"""

from __future__ import annotations

import json

from .bounds import DimensionReport
from .complexes import SimplicialComplex, flag_completion, from_graph, from_maximal_simplices
from .obstruction import CycleCertificate
from .octa import MINUS, PLUS

COMPLEX_SCHEMA = "complex/1"
CERTIFICATE_SCHEMA = "certificate/1"
REPORT_SCHEMA = "report/1"


class MalformedInput(ValueError):
    """Invalid input JSON; `location` points at the offending element."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def _decode_label(x, location: str):
    if isinstance(x, (str, int)):
        return x
    if isinstance(x, list) and len(x) == 2 and x[1] in ("+", "-"):
        return (_decode_label(x[0], location), PLUS if x[1] == "+" else MINUS)
    raise MalformedInput(f"label must be a string, an integer, or [label, '+'|'-'], got {x!r}", location)


def _encode_label(v):
    if isinstance(v, tuple) and len(v) == 2 and v[1] in (MINUS, PLUS):
        return [_encode_label(v[0]), "+" if v[1] == PLUS else "-"]
    if isinstance(v, (str, int)):
        return v
    return repr(v)


def complex_from_json(data) -> SimplicialComplex:
    if not isinstance(data, dict):
        raise MalformedInput("top level must be an object")
    order = None
    if "vertex_order" in data:
        raw = data["vertex_order"]
        if not isinstance(raw, list):
            raise MalformedInput("must be a list", "$.vertex_order")
        order = [_decode_label(v, f"$.vertex_order[{i}]") for i, v in enumerate(raw)]
    if "graph" in data:
        g = data["graph"]
        if not isinstance(g, dict) or "vertices" not in g or "edges" not in g:
            raise MalformedInput("graph needs 'vertices' and 'edges'", "$.graph")
        verts = [_decode_label(v, f"$.graph.vertices[{i}]") for i, v in enumerate(g["vertices"])]
        edges = []
        for i, e in enumerate(g["edges"]):
            if not isinstance(e, list) or len(e) != 2:
                raise MalformedInput("edge must be a pair", f"$.graph.edges[{i}]")
            edges.append(tuple(_decode_label(v, f"$.graph.edges[{i}]") for v in e))
        if order is not None:
            perm = {v: i for i, v in enumerate(order)}
            verts = sorted(verts, key=lambda v: perm.get(v, len(perm)))
        if data.get("flag"):
            return flag_completion(verts, edges)
        return from_graph(verts, edges)
    if "maximal_simplices" in data:
        raw = data["maximal_simplices"]
        if not isinstance(raw, list):
            raise MalformedInput("must be a list of simplices", "$.maximal_simplices")
        simplices = []
        for i, s in enumerate(raw):
            if not isinstance(s, list) or not s:
                raise MalformedInput("simplex must be a nonempty list", f"$.maximal_simplices[{i}]")
            simplices.append(tuple(_decode_label(v, f"$.maximal_simplices[{i}]") for v in s))
        if "vertices" in data:
            listed = {_decode_label(v, "$.vertices") for v in data["vertices"]}
            simplices.extend((v,) for v in sorted(listed, key=repr))
        try:
            return from_maximal_simplices(simplices, vertex_order=order)
        except ValueError as exc:
            raise MalformedInput(str(exc), "$.maximal_simplices") from exc
    raise MalformedInput("expected 'maximal_simplices' or 'graph'")


def complex_to_json(K: SimplicialComplex) -> dict:
    return {
        "schema": COMPLEX_SCHEMA,
        "vertices": [_encode_label(v) for v in K.vertices],
        "vertex_order": [_encode_label(v) for v in K.vertices],
        "maximal_simplices": [[_encode_label(v) for v in f] for f in K.maximal_faces()],
    }


def certificate_to_json(cert: CycleCertificate) -> dict:
    return {
        "schema": CERTIFICATE_SCHEMA,
        "degree": cert.degree,
        "M": [[_encode_label(v) for v in f] for f in sorted(cert.cycle)],
        "Delta": [_encode_label(v) for v in cert.delta],
        "omega_support": [
            [[_encode_label(v) for v in half] for half in cell] for cell in sorted(cert.omega)
        ],
        "star_condition": cert.star_condition,
        "evaluation": cert.evaluation,
    }


def certificate_from_json(data) -> dict:
    if not isinstance(data, dict):
        raise MalformedInput("certificate must be an object")
    for key in ("degree", "M", "Delta", "omega_support", "star_condition", "evaluation"):
        if key not in data:
            raise MalformedInput(f"missing key {key!r}", "$")
    out = {
        "degree": data["degree"],
        "M": [tuple(_decode_label(v, f"$.M[{i}]") for v in f) for i, f in enumerate(data["M"])],
        "Delta": tuple(_decode_label(v, "$.Delta") for v in data["Delta"]),
        "omega_support": [
            tuple(tuple(_decode_label(v, f"$.omega_support[{i}]") for v in half) for half in cell)
            for i, cell in enumerate(data["omega_support"])
        ],
        "star_condition": bool(data["star_condition"]),
        "evaluation": int(data["evaluation"]),
    }
    return out


def interval_json(span) -> dict:
    if span is None:
        return {"known": False}
    lo, hi = span
    return {"known": True, "lower": lo, "upper": hi, "exact": lo == hi}


def report_to_json(report: DimensionReport) -> dict:
    data = {
        "schema": REPORT_SCHEMA,
        "input": {"vertices": report.vertices, "dim": report.dim, "flag": report.flag},
        "gd": report.gd,
        "l2dim": report.l2dim,
        "mod2_reduced_betti": list(report.mod2_betti),
        "rational_reduced_betti": list(report.rational_betti),
        "vkdim_OL": interval_json(report.vkdim),
        "embdim_OL": interval_json(report.embdim),
        "actdim_AL": interval_json(report.actdim),
        "conjecture": report.conjecture_status,
        "bounds": [r.to_json() for r in report.records],
        "warnings": list(report.warnings),
        "determined": report.determined,
    }
    if report.missing_clique is not None:
        data["missing_clique"] = [_encode_label(v) for v in report.missing_clique]
    if report.certificate is not None:
        data["certificate"] = certificate_to_json(report.certificate)
    if report.vanishing is not None:
        data["vanishing"] = {
            "status": report.vanishing.status,
            "primitive_size": len(report.vanishing.primitive or ()),
            "integral_checked": report.vanishing.integral_checked,
        }
    return data


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
