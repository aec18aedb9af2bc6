"""JSON encoding of morphisms and lattices.

Scalars travel as strings in the grammar of ``format_scalar``; subspaces as
the nonzero rows of their RREF.  ``dumps`` fixes separators and key order
so equal inputs always produce identical bytes.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Any

from .category import InterpCategory, Morphism, SumObject, as_object
from .errors import MismatchError
from .exact import Scalar, format_scalar, parse_scalar
from .gfq import Subspace


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def morphism_to_json(F: Morphism) -> dict:
    blocks = defaultdict(list)
    for i, j, W, c in F.terms():
        blocks[(i, j)].append({"subspace_rref": W.to_json(), "coeff": format_scalar(c)})
    return {
        "source": list(F.source.dims),
        "target": list(F.target.dims),
        "blocks": [{"sx": i, "ty": j, "terms": terms} for (i, j), terms in sorted(blocks.items())],
    }


def morphism_from_json(cat: InterpCategory, doc: dict) -> Morphism:
    try:
        X = as_object(doc["source"])
        Y = as_object(doc["target"])
        blocks: dict = defaultdict(dict)
        for b in doc.get("blocks", []):
            i, j = int(b["sx"]), int(b["ty"])
            amb = X.dims[i] + Y.dims[j]
            for term in b["terms"]:
                rows = term["subspace_rref"]
                if any(len(r) != amb for r in rows):
                    raise MismatchError(f"rows {rows} do not have length {amb}")
                if any(not 0 <= int(a) < cat.q for r in rows for a in r):
                    raise MismatchError(f"entries of {rows} are not elements of F_{cat.q}")
                W = Subspace.span(cat.field, amb, rows)
                if W.dim != len(rows):
                    raise MismatchError(f"rows {rows} are not independent")
                blocks[(i, j)][W] = blocks[(i, j)].get(W, Scalar(0)) + parse_scalar(str(term["coeff"]))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        if isinstance(exc, MismatchError):
            raise
        raise MismatchError(f"malformed morphism document: {exc!r}") from None
    return cat.morphism(X, Y, blocks)


def object_to_json(X: SumObject) -> list[int]:
    return list(X.dims)
