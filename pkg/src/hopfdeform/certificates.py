"""Certificate serialization.

Certificates carry the full algebra document, the series payloads, the
construction options and per-order solve reports.  Serialization is
canonical (sorted keys, sorted terms), so identical runs produce
byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .errors import SchemaError
from .hseries import HSeries
from .lie import format_rational, load_lie_algebra, parse_rational
from .tensor import TensorPoly
from .wedge import WedgeElem

FORMAT = "hopfdeform-certificate"
VERSION = 1

CONVENTIONS = {
    "alt_normalization": "1/n!",
    "wedge_embedding": "signed permutation sum scaled by 2^(-k(k-1)/2)",
    "involution": "e -> -f, f -> -e, torus -> -1, extended multiplicatively",
    "pbw_order": "input basis order",
    "superscript": "factor i goes to the slot written in position i",
}


def tensor_terms_to_json(t):
    out = []
    for key, c in sorted(t.terms.items()):
        out.append({"legs": [list(m) for m in key], "c": format_rational(c)})
    return out


def tensor_terms_from_json(L, arity, doc):
    terms = {}
    for entry in doc:
        try:
            legs = entry["legs"]
            c = parse_rational(entry["c"])
        except (TypeError, KeyError) as exc:
            raise SchemaError(f"malformed tensor term {entry!r}") from exc
        if len(legs) != arity:
            raise SchemaError("tensor term leg count does not match arity")
        key = tuple(tuple(int(e) for e in m) for m in legs)
        for m in key:
            if len(m) != L.dim or any(e < 0 for e in m):
                raise SchemaError(f"malformed monomial {m!r}")
        terms[key] = terms.get(key, Fraction(0)) + c
    return TensorPoly(L, arity, terms)


def series_to_json(hs):
    coeffs = []
    for k, c in enumerate(hs.coeffs):
        if c.is_zero():
            continue
        coeffs.append({"h": k, "terms": tensor_terms_to_json(c)})
    return {"arity": hs.arity, "order": hs.order, "coeffs": coeffs}


def series_from_json(L, doc, degree_cap=None):
    try:
        arity = int(doc["arity"])
        order = int(doc["order"])
        coeffs_doc = doc["coeffs"]
    except (TypeError, KeyError) as exc:
        raise SchemaError(f"malformed series document: {exc}") from exc
    terms = {}
    for entry in coeffs_doc:
        k = int(entry["h"])
        if not (0 <= k <= order):
            raise SchemaError(f"series coefficient at h^{k} outside order {order}")
        terms[k] = tensor_terms_from_json(L, arity, entry["terms"])
    return HSeries.from_terms(L, arity, order, terms, degree_cap)


def wedge_to_json(w):
    return {
        "degree": w.degree,
        "terms": [
            {"indices": list(key), "c": format_rational(c)}
            for key, c in sorted(w.terms.items())
        ],
    }


def wedge_from_json(doc):
    try:
        degree = int(doc["degree"])
        terms_doc = doc["terms"]
    except (TypeError, KeyError) as exc:
        raise SchemaError(f"malformed wedge document: {exc}") from exc
    terms = {}
    for entry in terms_doc:
        key = tuple(int(i) for i in entry["indices"])
        terms[key] = terms.get(key, Fraction(0)) + parse_rational(entry["c"])
    return WedgeElem(degree, terms)


def algebra_hash(L):
    text = json.dumps(L.to_json_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def _base_doc(L, kind):
    return {
        "format": FORMAT,
        "version": VERSION,
        "type": kind,
        "algebra": L.to_json_dict(),
        "algebra_hash": algebra_hash(L),
        "conventions": dict(CONVENTIONS),
    }


def associator_to_json(cert, verification=None):
    doc = _base_doc(cert.L, "associator")
    doc.update(
        {
            "order": cert.order,
            "options": cert.options,
            "leading_wedge": wedge_to_json(cert.phi_wedge),
            "series": {"associator": series_to_json(cert.phi)},
            "reports": cert.reports,
        }
    )
    if verification is not None:
        doc["verification"] = verification
    return doc


def twist_to_json(cert, verification=None):
    doc = _base_doc(cert.L, "twist")
    doc.update(
        {
            "order": cert.order,
            "infinitesimal": wedge_to_json(cert.f_wedge),
            "associator_options": cert.associator.options,
            "leading_wedge": wedge_to_json(cert.associator.phi_wedge),
            "series": {
                "twist": series_to_json(cert.F),
                "associator": series_to_json(cert.associator.phi.truncate(cert.order)),
                "antipode_element": series_to_json(cert.w),
            },
            "reports": cert.reports,
            "notes": {
                k: v for k, v in cert.notes.items()
            },
            "h3_report": None
            if cert.h3_report is None
            else {
                "h3_dim": cert.h3_report["h3_dim"],
                "sector_dim_wedge3": cert.h3_report["sector_dim_wedge3"],
                "representatives": [
                    wedge_to_json(w) for w in cert.h3_report["representatives"]
                ],
            },
        }
    )
    if verification is not None:
        doc["verification"] = verification
    return doc


def qt_to_json(cert, verification=None):
    doc = _base_doc(cert.L, "quasitriangular")
    doc.update(
        {
            "order": cert.order,
            "options": cert.options,
            "t": tensor_terms_to_json(cert.t),
            "series": {
                "associator": series_to_json(cert.phi),
                "braiding": series_to_json(cert.R),
            },
            "reports": cert.reports,
        }
    )
    if verification is not None:
        doc["verification"] = verification
    return doc


def dump(doc, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def load_certificate(path_or_doc):
    """Parse a certificate file; returns (doc, L, series dict)."""
    if isinstance(path_or_doc, dict):
        doc = path_or_doc
    else:
        try:
            with open(path_or_doc, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read certificate: {exc}") from exc
        if not text.strip():
            raise SchemaError("certificate file is empty")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise SchemaError("not a certificate document")
    L = load_lie_algebra(doc["algebra"])
    if doc.get("algebra_hash") != algebra_hash(L):
        raise SchemaError("algebra hash mismatch")
    series = {}
    for name, sdoc in doc.get("series", {}).items():
        series[name] = series_from_json(L, sdoc)
    return doc, L, series
