"""JSON document schemas for every value the command line reads or writes.

Schemas (all integers are exact, series coefficients are fraction strings):

* square matrix   {"labels": [str...], "rows": [[int...]...]}
* general matrix  {"row_labels": [...], "col_labels": [...], "rows": [[int...]...]}
* flip pair       {"name"?: str, "alphabet": [str...], "A": rows, "J": rows}
* series          {"order": int, "coeffs": ["p/q" | "p", ...]}
* certificate     {"kind": "he"|"sfe", "lag": int, "R": rows, "S"?: rows}
                  (labels come from the flanking pairs)
* chain           {"pairs": [pair...], "links": [certificate...]}
* block flip rule {"A": matrix, "window": int,
                   "phi": [{"block": "a b c", "image": "d"}...]}
* conjugacy       {"from": pair, "to": pair, "psi": {label: label},
                   "inverse_window": int}

Every parser raises SchemaError with the offending field path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .constructions import BlockFlipSpec, OneBlockConjugacySpec
from .equivalence import HalfElemCert, StrongChain, he_check
from .errors import FlipShiftError, SchemaError
from .flips import FlipPair
from .matrices import IntMatrix
from .series import TruncatedSeries


def _expect(doc: Any, kind: type, path: str):
    if not isinstance(doc, kind):
        raise SchemaError(path, f"expected {kind.__name__}, got {type(doc).__name__}")
    return doc


def _str_list(doc: Any, path: str) -> list[str]:
    _expect(doc, list, path)
    out = []
    for i, x in enumerate(doc):
        _expect(x, str, f"{path}[{i}]")
        out.append(x)
    return out


def _int_rows(doc: Any, path: str) -> list[list[int]]:
    _expect(doc, list, path)
    rows = []
    for i, row in enumerate(doc):
        _expect(row, list, f"{path}[{i}]")
        out = []
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError(f"{path}[{i}][{j}]", f"expected integer, got {x!r}")
            out.append(x)
        rows.append(out)
    return rows


# -- matrices --------------------------------------------------------------------

def matrix_to_doc(m: IntMatrix) -> dict:
    if m.is_square and m.row_labels == m.col_labels:
        return {"labels": list(m.row_labels), "rows": m.to_rows()}
    return {"row_labels": list(m.row_labels), "col_labels": list(m.col_labels),
            "rows": m.to_rows()}


def matrix_from_doc(doc: Any, path: str = "matrix") -> IntMatrix:
    _expect(doc, dict, path)
    rows = _int_rows(doc.get("rows"), f"{path}.rows")
    try:
        if "labels" in doc:
            return IntMatrix.square(_str_list(doc["labels"], f"{path}.labels"), rows)
        rl = _str_list(doc.get("row_labels"), f"{path}.row_labels")
        cl = _str_list(doc.get("col_labels"), f"{path}.col_labels")
        return IntMatrix.rect(rl, cl, rows)
    except FlipShiftError as e:
        raise SchemaError(path, str(e)) from e


# -- flip pairs --------------------------------------------------------------------

def pair_to_doc(p: FlipPair) -> dict:
    doc: dict = {}
    if p.name:
        doc["name"] = p.name
    doc.update({"alphabet": list(p.alphabet), "A": p.A.to_rows(), "J": p.J.to_rows()})
    return doc


def pair_from_doc(doc: Any, path: str = "pair") -> FlipPair:
    _expect(doc, dict, path)
    alphabet = _str_list(doc.get("alphabet"), f"{path}.alphabet")
    a_rows = _int_rows(doc.get("A"), f"{path}.A")
    j_rows = _int_rows(doc.get("J"), f"{path}.J")
    name = doc.get("name")
    if name is not None:
        _expect(name, str, f"{path}.name")
    try:
        a = IntMatrix.square(alphabet, a_rows)
        j = IntMatrix.square(alphabet, j_rows)
    except FlipShiftError as e:
        raise SchemaError(path, str(e)) from e
    return FlipPair(a, j, name=name)


# -- series --------------------------------------------------------------------

def series_to_doc(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [str(c) for c in s.coeffs]}


def series_from_doc(doc: Any, path: str = "series") -> TruncatedSeries:
    _expect(doc, dict, path)
    order = doc.get("order")
    if not isinstance(order, int) or isinstance(order, bool):
        raise SchemaError(f"{path}.order", "expected integer")
    raw = _expect(doc.get("coeffs"), list, f"{path}.coeffs")
    coeffs = []
    for i, c in enumerate(raw):
        try:
            coeffs.append(Fraction(c))
        except (ValueError, ZeroDivisionError, TypeError) as e:
            raise SchemaError(f"{path}.coeffs[{i}]", f"bad fraction {c!r}") from e
    try:
        return TruncatedSeries(order, tuple(coeffs))
    except FlipShiftError as e:
        raise SchemaError(path, str(e)) from e


# -- certificates and chains -----------------------------------------------------------

def cert_to_doc(cert: HalfElemCert) -> dict:
    return {"kind": "he", "lag": 1, "R": cert.R.to_rows(), "S": cert.S.to_rows()}


def chain_to_doc(chain: StrongChain) -> dict:
    return {"pairs": [pair_to_doc(p) for p in chain.pairs],
            "links": [cert_to_doc(c) for c in chain.links]}


def chain_from_doc(doc: Any, path: str = "chain") -> StrongChain:
    """Parse and re-verify a chain; every link is re-checked from its R."""
    _expect(doc, dict, path)
    raw_pairs = _expect(doc.get("pairs"), list, f"{path}.pairs")
    pairs = tuple(pair_from_doc(p, f"{path}.pairs[{i}]") for i, p in enumerate(raw_pairs))
    if not pairs:
        raise SchemaError(f"{path}.pairs", "a chain needs at least one pair")
    raw_links = _expect(doc.get("links", []), list, f"{path}.links")
    if len(raw_links) != len(pairs) - 1:
        raise SchemaError(f"{path}.links",
                          f"{len(raw_links)} links do not fit {len(pairs)} pairs")
    links = []
    for i, ldoc in enumerate(raw_links):
        lp = f"{path}.links[{i}]"
        _expect(ldoc, dict, lp)
        if ldoc.get("kind", "he") != "he":
            raise SchemaError(f"{lp}.kind", "chain links must have kind 'he'")
        rows = _int_rows(ldoc.get("R"), f"{lp}.R")
        src, dst = pairs[i], pairs[i + 1]
        try:
            r = IntMatrix.rect(src.alphabet, dst.alphabet, rows)
        except FlipShiftError as e:
            raise SchemaError(f"{lp}.R", str(e)) from e
        supplied = None
        if "S" in ldoc:
            srows = _int_rows(ldoc["S"], f"{lp}.S")
            try:
                supplied = IntMatrix.rect(dst.alphabet, src.alphabet, srows)
            except FlipShiftError as e:
                raise SchemaError(f"{lp}.S", str(e)) from e
        links.append(he_check(src, dst, r, supplied_S=supplied))
    return StrongChain(pairs=pairs, links=tuple(links))


# -- block flip rules and conjugacies ----------------------------------------------------

def blockflip_to_doc(spec: BlockFlipSpec) -> dict:
    return {"A": matrix_to_doc(spec.A), "window": spec.window,
            "phi": [{"block": " ".join(block), "image": image}
                    for block, image in sorted(spec.rule.items())]}


def blockflip_from_doc(doc: Any, path: str = "spec") -> BlockFlipSpec:
    _expect(doc, dict, path)
    a = matrix_from_doc(doc.get("A"), f"{path}.A")
    window = doc.get("window")
    if not isinstance(window, int) or isinstance(window, bool) or window < 0:
        raise SchemaError(f"{path}.window", "expected integer >= 0")
    raw = _expect(doc.get("phi"), list, f"{path}.phi")
    rule: dict[tuple[str, ...], str] = {}
    for i, entry in enumerate(raw):
        ep = f"{path}.phi[{i}]"
        _expect(entry, dict, ep)
        block = _expect(entry.get("block"), str, f"{ep}.block")
        image = _expect(entry.get("image"), str, f"{ep}.image")
        rule[tuple(block.split())] = image
    return BlockFlipSpec(a, window, rule)


def conjugacy_to_doc(spec: OneBlockConjugacySpec) -> dict:
    return {"from": pair_to_doc(spec.source), "to": pair_to_doc(spec.target),
            "psi": dict(spec.psi), "inverse_window": spec.inverse_window}


def conjugacy_from_doc(doc: Any, path: str = "conjugacy") -> OneBlockConjugacySpec:
    _expect(doc, dict, path)
    src = pair_from_doc(doc.get("from"), f"{path}.from")
    dst = pair_from_doc(doc.get("to"), f"{path}.to")
    psi = _expect(doc.get("psi"), dict, f"{path}.psi")
    for k, v in psi.items():
        _expect(k, str, f"{path}.psi key")
        _expect(v, str, f"{path}.psi[{k}]")
    m = doc.get("inverse_window")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise SchemaError(f"{path}.inverse_window", "expected integer >= 0")
    return OneBlockConjugacySpec(src, dst, dict(psi), m)
