"""Canonical JSON documents for matroids, codes, graphs and atom lists.

Serialization always emits the canonical form: subsets as sorted index
arrays, families sorted lexicographically, edges with u < v sorted by
endpoints, fixed key order, so serialize(deserialize(text)) reproduces
canonical input byte-for-byte. Validation errors carry the JSON path of
the offending field.
"""

from __future__ import annotations

import json

from .bitset import MAX_GROUND_SET, indices_of, mask_of
from .codes import BlockCode
from .constructions import AtomSpec, ConstructionGraph
from .errors import SchemaError
from .lattice import CyclicFlatLattice
from .matroid import CYCLIC_FLATS, INDEPENDENT_SETS, RANK_TABLE, Matroid

SCHEMA_VERSION = "1"

_REPR_KINDS = (INDEPENDENT_SETS, RANK_TABLE, CYCLIC_FLATS)


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise SchemaError(path, message)


def _get(doc: dict, key: str, path: str):
    _expect(isinstance(doc, dict), path, "expected an object")
    if key not in doc:
        raise SchemaError(f"{path}.{key}" if path else key, "missing field")
    return doc[key]


def _int_field(doc: dict, key: str, path: str) -> int:
    value = _get(doc, key, path)
    sub = f"{path}.{key}" if path else key
    _expect(isinstance(value, int) and not isinstance(value, bool), sub,
            "expected an integer")
    return value


def _index_list(value, path: str, n: int) -> int:
    """A subset given as an index array; returns its mask."""
    _expect(isinstance(value, list), path, "expected an array of indices")
    for i, e in enumerate(value):
        _expect(isinstance(e, int) and not isinstance(e, bool),
                f"{path}[{i}]", "expected an integer index")
        _expect(0 <= e < n, f"{path}[{i}]", f"index out of range 0..{n - 1}")
    _expect(len(set(value)) == len(value), path, "duplicate indices")
    return mask_of(value)


# -- matroid ----------------------------------------------------------


def matroid_to_doc(matroid: Matroid) -> dict:
    if matroid.repr_kind == INDEPENDENT_SETS:
        data = sorted(list(indices_of(m)) for m in matroid.repr_data)
    elif matroid.repr_kind == RANK_TABLE:
        data = list(matroid.repr_data)
    else:
        lat: CyclicFlatLattice = matroid.repr_data  # type: ignore[assignment]
        data = [{"set": list(indices_of(m)), "rank": r} for m, r in lat.flats]
    return {"n": matroid.n, "repr": matroid.repr_kind, "data": data}


def matroid_from_doc(doc: dict, validate: bool = True) -> Matroid:
    n = _int_field(doc, "n", "")
    _expect(0 <= n <= MAX_GROUND_SET, "n", f"ground set size out of range 0..{MAX_GROUND_SET}")
    kind = _get(doc, "repr", "")
    _expect(kind in _REPR_KINDS, "repr", f"expected one of {', '.join(_REPR_KINDS)}")
    data = _get(doc, "data", "")
    _expect(isinstance(data, list), "data", "expected an array")
    if kind == INDEPENDENT_SETS:
        family = [_index_list(entry, f"data[{i}]", n) for i, entry in enumerate(data)]
        return Matroid.from_independent_sets(n, family, validate=validate)
    if kind == RANK_TABLE:
        _expect(len(data) == 1 << n, "data", f"expected {1 << n} entries")
        for i, v in enumerate(data):
            _expect(isinstance(v, int) and not isinstance(v, bool),
                    f"data[{i}]", "expected an integer rank")
        return Matroid.from_rank_table(n, data, validate=validate)
    flats = []
    for i, entry in enumerate(data):
        mask = _index_list(_get(entry, "set", f"data[{i}]"), f"data[{i}].set", n)
        rank = _int_field(entry, "rank", f"data[{i}]")
        _expect(rank >= 0, f"data[{i}].rank", "rank must be non-negative")
        flats.append((mask, rank))
    return Matroid.from_cyclic_flats(n, CyclicFlatLattice(n, flats), validate=validate)


# -- code -------------------------------------------------------------


def code_to_doc(code: BlockCode) -> dict:
    return {"s": code.s, "n": code.n,
            "codewords": sorted(list(w) for w in code.codewords)}


def code_from_doc(doc: dict) -> BlockCode:
    s = _int_field(doc, "s", "")
    _expect(s >= 2, "s", "alphabet size must be at least 2")
    n = _int_field(doc, "n", "")
    _expect(n >= 1, "n", "code length must be positive")
    words = _get(doc, "codewords", "")
    _expect(isinstance(words, list) and words, "codewords",
            "expected a non-empty array")
    out = []
    for i, w in enumerate(words):
        _expect(isinstance(w, list), f"codewords[{i}]", "expected an array of symbols")
        _expect(len(w) == n, f"codewords[{i}]", f"expected length {n}")
        for j, c in enumerate(w):
            _expect(isinstance(c, int) and not isinstance(c, bool),
                    f"codewords[{i}][{j}]", "expected an integer symbol")
            _expect(0 <= c < s, f"codewords[{i}][{j}]", f"symbol out of range 0..{s - 1}")
        out.append(tuple(w))
    return BlockCode(s, n, out)


# -- construction graph ----------------------------------------------


def graph_to_doc(graph: ConstructionGraph) -> dict:
    edges = sorted((min(e), max(e), g) for e, g in graph.edges.items())
    return {"m": graph.m,
            "edges": [{"u": u, "v": v, "gamma": g} for u, v, g in edges],
            "alpha": list(graph.alpha), "beta": list(graph.beta),
            "k": graph.k, "r": graph.r, "delta": graph.delta}


def graph_from_doc(doc: dict) -> ConstructionGraph:
    m = _int_field(doc, "m", "")
    _expect(m >= 1, "m", "need at least one vertex")
    raw_edges = _get(doc, "edges", "")
    _expect(isinstance(raw_edges, list), "edges", "expected an array")
    edges = {}
    for i, entry in enumerate(raw_edges):
        u = _int_field(entry, "u", f"edges[{i}]")
        v = _int_field(entry, "v", f"edges[{i}]")
        gamma = _int_field(entry, "gamma", f"edges[{i}]")
        _expect(0 <= u < m, f"edges[{i}].u", f"vertex out of range 0..{m - 1}")
        _expect(0 <= v < m, f"edges[{i}].v", f"vertex out of range 0..{m - 1}")
        _expect(u != v, f"edges[{i}]", "loop edges are not allowed")
        pair = frozenset((u, v))
        _expect(pair not in edges, f"edges[{i}]", "duplicate edge")
        edges[pair] = gamma
    for key in ("alpha", "beta"):
        vec = _get(doc, key, "")
        _expect(isinstance(vec, list) and len(vec) == m, key,
                f"expected an array of {m} integers")
        for i, v in enumerate(vec):
            _expect(isinstance(v, int) and not isinstance(v, bool),
                    f"{key}[{i}]", "expected an integer")
    return ConstructionGraph(m, edges, doc["alpha"], doc["beta"],
                             _int_field(doc, "k", ""), _int_field(doc, "r", ""),
                             _int_field(doc, "delta", ""))


# -- atoms ------------------------------------------------------------


def atoms_to_doc(n: int, atoms) -> dict:
    return {"n": n, "atoms": [{"set": list(indices_of(a.mask)), "rank": a.rank}
                              for a in atoms]}


def atoms_from_doc(doc: dict) -> tuple[int, tuple[AtomSpec, ...]]:
    n = _int_field(doc, "n", "")
    _expect(1 <= n <= MAX_GROUND_SET, "n", f"ground set size out of range 1..{MAX_GROUND_SET}")
    raw = _get(doc, "atoms", "")
    _expect(isinstance(raw, list) and raw, "atoms", "expected a non-empty array")
    atoms = []
    for i, entry in enumerate(raw):
        mask = _index_list(_get(entry, "set", f"atoms[{i}]"), f"atoms[{i}].set", n)
        rank = _int_field(entry, "rank", f"atoms[{i}]")
        _expect(0 < rank, f"atoms[{i}].rank", "rank must be positive")
        _expect(rank < bin(mask).count("1"), f"atoms[{i}].rank",
                "rank must stay below the atom size")
        atoms.append(AtomSpec(mask, rank))
    return n, tuple(atoms)


# -- text form --------------------------------------------------------


def dumps_canonical(doc: dict) -> str:
    """Deterministic text form: given key order, compact separators,
    trailing newline."""
    return json.dumps(doc, separators=(", ", ": ")) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    _expect(isinstance(doc, dict), "", "expected a JSON object")
    return doc
