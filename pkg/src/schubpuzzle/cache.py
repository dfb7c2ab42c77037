"""
On-disk cache of Schubert classes and structure-constant tables, one JSON
file per (kind, n, k).  Polynomials are stored as canonical strings, so a
hit reproduces the same serialization byte for byte.  Files written under
another schema version are ignored.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .gkm import StructureTable, schubert_class, structure_constants_gkm
from .poly import Poly
from .puzzle import product_via_puzzles
from .strings import BitString, as_bitstring

SCHEMA_VERSION = 1
ENV_VAR = "SCHUBPUZZLE_CACHE"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "schubpuzzle"


class CacheStore:
    def __init__(self, directory=None):
        self.dir = Path(directory) if directory is not None else default_dir()
        self._loaded = {}

    def path(self, kind: str, n: int, k: int) -> Path:
        return self.dir / ("%s-%d-%d.json" % (kind, n, k))

    def load(self, kind: str, n: int, k: int) -> dict:
        key = (kind, n, k)
        if key in self._loaded:
            return self._loaded[key]
        records = {}
        p = self.path(kind, n, k)
        try:
            data = json.loads(p.read_text())
        except (OSError, ValueError):
            data = None
        if isinstance(data, dict) and data.get("version") == SCHEMA_VERSION \
                and data.get("kind") == kind and data.get("n") == n and data.get("k") == k:
            records = data.get("records", {})
        self._loaded[key] = records
        return records

    def store(self, kind: str, n: int, k: int, name: str, record):
        records = self.load(kind, n, k)
        records[name] = record
        self.dir.mkdir(parents=True, exist_ok=True)
        body = json.dumps(
            {"version": SCHEMA_VERSION, "kind": kind, "n": n, "k": k, "records": records},
            sort_keys=True, indent=1,
        )
        # write then rename so readers never see half a file
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as f:
            f.write(body)
        os.replace(tmp, self.path(kind, n, k))


def _table_record(t: StructureTable) -> dict:
    return {str(nu): str(p) for nu, p in t.items()}


def _table_from_record(lam, mu, rec: dict) -> StructureTable:
    return StructureTable(lam, mu, {BitString.parse(nu): Poly.parse(p) for nu, p in rec.items()})


def cached_product(lam, mu, engine: str = "gkm", store: CacheStore | None = None) -> StructureTable:
    lam, mu = as_bitstring(lam), as_bitstring(mu)
    compute = structure_constants_gkm if engine == "gkm" else product_via_puzzles
    if store is None:
        return compute(lam, mu)
    kind = "products-" + engine
    name = "%s,%s" % (lam, mu)
    rec = store.load(kind, lam.n, lam.k).get(name)
    if rec is not None:
        return _table_from_record(lam, mu, rec)
    t = compute(lam, mu)
    store.store(kind, lam.n, lam.k, name, _table_record(t))
    return t


def cached_class(lam, store: CacheStore | None = None) -> dict:
    "mu -> S_lam|_mu as canonical strings"
    lam = as_bitstring(lam)
    if store is not None:
        rec = store.load("classes", lam.n, lam.k).get(str(lam))
        if rec is not None:
            return rec
    rec = {str(mu): str(p) for mu, p in schubert_class(lam).restrictions.items()}
    if store is not None:
        store.store("classes", lam.n, lam.k, str(lam), rec)
    return rec
