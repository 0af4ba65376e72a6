"""JSON and TSV encodings of vectors and certificates.

Values are exact rational strings (``"5"``, ``"7/3"``); subsets are lists
of leaf labels in lexicographic order.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .pluecker import QuadraticRelation, RelationResult, TropicalCertificate
from .vectors import DissimilarityVector, SubsetVector, WeightVector

__all__ = [
    "FormatError",
    "vector_to_dict",
    "vector_from_dict",
    "vector_to_json",
    "vector_from_json",
    "vector_to_tsv",
    "vector_from_tsv",
    "read_vector",
    "relation_to_dict",
    "result_to_dict",
    "certificate_to_dict",
]


class FormatError(ValueError):
    """Malformed serialized vector."""


def vector_to_dict(vec: SubsetVector) -> dict:
    out = {
        "n": vec.n,
        "m": vec.m,
        "entries": [{"subset": list(s), "value": str(v)} for s, v in vec.items()],
    }
    source = getattr(vec, "source", None)
    if source is not None:
        out["source"] = source
    return out


def _build(n, m, entries, source, kind):
    if kind is None:
        kind = WeightVector if source is not None else DissimilarityVector
        if any(v < 0 for v in entries.values()) or m < 2:
            kind = WeightVector
    if kind is WeightVector:
        return WeightVector(n, m, entries, source)
    return kind(n, m, entries)


def vector_from_dict(data: dict, kind=None) -> SubsetVector:
    """Inverse of :func:`vector_to_dict`.

    ``kind`` forces the vector class; by default a vector with a ``source``
    or a negative entry is a :class:`WeightVector`, anything else a
    :class:`DissimilarityVector`.
    """
    try:
        n, m = int(data["n"]), int(data["m"])
        entries = {}
        for item in data["entries"]:
            key = tuple(int(x) for x in item["subset"])
            if key in entries:
                raise FormatError(f"subset {key} listed twice")
            entries[key] = Fraction(str(item["value"]))
        return _build(n, m, entries, data.get("source"), kind)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed vector: {exc}") from None


def vector_to_json(vec: SubsetVector, indent=None) -> str:
    return json.dumps(vector_to_dict(vec), indent=indent)


def vector_from_json(text: str, kind=None) -> SubsetVector:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("vector JSON must be an object")
    return vector_from_dict(data, kind)


def vector_to_tsv(vec: SubsetVector) -> str:
    """Header line, then ``i,j,k<TAB>value`` per subset."""
    lines = ["subset\tvalue"]
    lines += [",".join(map(str, s)) + "\t" + str(v) for s, v in vec.items()]
    return "\n".join(lines) + "\n"


def vector_from_tsv(text: str, kind=None) -> SubsetVector:
    """Read :func:`vector_to_tsv` output; ``n`` is the largest label seen."""
    entries = {}
    try:
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or (lineno == 1 and line.startswith("subset")):
                continue
            subset, value = line.split("\t")
            key = tuple(int(x) for x in subset.split(","))
            if key in entries:
                raise FormatError(f"line {lineno}: subset {key} listed twice")
            entries[key] = Fraction(value.strip())
        if not entries:
            raise FormatError("no entries")
        sizes = {len(k) for k in entries}
        if len(sizes) != 1:
            raise FormatError("subsets of different sizes")
        n = max(max(k) for k in entries)
        return _build(n, sizes.pop(), entries, None, kind)
    except FormatError:
        raise
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed TSV vector: {exc}") from None


def read_vector(text: str, kind=None) -> SubsetVector:
    """Parse JSON or TSV, whichever ``text`` looks like."""
    if text.lstrip().startswith("{"):
        return vector_from_json(text, kind)
    return vector_from_tsv(text, kind)


def relation_to_dict(rel: QuadraticRelation) -> dict:
    return {
        "text": str(rel),
        "monomials": [{"coefficient": t.coefficient, "left": list(t.left), "right": list(t.right)}
                      for t in rel.monomials],
    }


def result_to_dict(res: RelationResult) -> dict:
    return {
        "relation": relation_to_dict(res.relation),
        "weights": [str(x) for x in res.weights],
        "optimum": str(res.optimum),
        "achievers": list(res.achievers),
    }


def certificate_to_dict(cert: TropicalCertificate) -> dict:
    return {
        "m": cert.m,
        "n": cert.n,
        "convention": cert.convention,
        "relations_checked": len(cert.results),
        "passed": cert.passed,
        "failures": [result_to_dict(r) for r in cert.failures],
    }
