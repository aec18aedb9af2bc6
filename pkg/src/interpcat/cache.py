"""On-disk cache of subspace lattices keyed by (q, n).

Entries are canonical JSON files written to a temporary name and renamed
into place, so readers never see a partial file.  Anything unreadable, of
another schema version or inconsistent with its key is recomputed.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .gfq import GF, FqField, Subspace
from .jsonio import dumps
from .lattice import DEFAULT_MAX_VECTORS, LatticeIndex, enumerate_subspaces, gaussian_binomial

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_ENV = "INTERPCAT_CACHE_DIR"


def default_cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def lattice_to_json(L: LatticeIndex) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "field": L.field.to_json(),
        "n": L.n,
        "subspaces": [s.to_json() for s in L.subspaces],
        "mobius": [[i, j, mu] for (i, j), mu in sorted(L.mobius_table.items())],
    }


def lattice_from_json(doc: dict, F: FqField, n: int) -> LatticeIndex:
    """Rebuild a LatticeIndex, raising ValueError on any inconsistency."""
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"schema {doc.get('schema')!r}, expected {SCHEMA_VERSION}")
    if FqField.from_json(doc["field"]) != F or doc["n"] != n:
        raise ValueError("entry belongs to a different (q, n)")
    subs = tuple(Subspace(n, tuple(tuple(r) for r in rows)) for rows in doc["subspaces"])
    if len(subs) != sum(gaussian_binomial(n, k, F.q) for k in range(n + 1)) or len(set(subs)) != len(subs):
        raise ValueError("wrong number of subspaces")
    if list(subs) != sorted(subs, key=Subspace.sort_key):
        raise ValueError("subspaces out of order")
    if any(Subspace.span(F, n, s.rows) != s for s in subs):
        raise ValueError("a stored basis is not in reduced row-echelon form")
    table = {(int(i), int(j)): int(mu) for i, j, mu in doc["mobius"]}
    if any(table.get((i, i)) != 1 for i in range(len(subs))):
        raise ValueError("Möbius table lacks its diagonal")
    return LatticeIndex(F, n, subs, table)


class LatticeCache:
    def __init__(self, directory: str | os.PathLike | None = None) -> None:
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, F: FqField, n: int) -> Path | None:
        if self.directory is None:
            return None
        tag = f"q{F.q}" if F.e == 1 else f"q{F.q}-m{''.join(map(str, F.modulus))}"
        return self.directory / f"lattice-{tag}-n{n}.json"

    def load(self, q: int | FqField, n: int) -> LatticeIndex | None:
        F = GF(q)
        path = self.path(F, n)
        if path is None or not path.exists():
            return None
        try:
            return lattice_from_json(json.loads(path.read_text(encoding="utf-8")), F, n)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("discarding cache entry %s: %s", path, exc)
            return None

    def store(self, L: LatticeIndex) -> Path | None:
        path = self.path(L.field, L.n)
        if path is None:
            return None
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(dumps(lattice_to_json(L)))
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        return path

    def get(self, q: int | FqField, n: int, max_vectors: int = DEFAULT_MAX_VECTORS) -> tuple[LatticeIndex, bool]:
        """The lattice of F_q^n and whether it came from disk."""
        cached = self.load(q, n)
        if cached is not None:
            return cached, True
        L = enumerate_subspaces(q, n, max_vectors)
        try:
            self.store(L)
        except OSError as exc:
            log.warning("could not write lattice cache: %s", exc)
        return L, False
