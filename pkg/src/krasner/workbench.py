"""Builtin structures, the JSON file format, and corpus generation.

A structure file is a JSON object with keys, in this order::

    name, m, n, size, zero, one, fTable, gTable[, provenance]

``fTable`` nests ``m`` levels of arrays in lexicographic tuple order and
holds a sorted index array at each leaf; ``gTable`` nests ``n`` levels and
holds single indices.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from .classify import multiplicative_subsets
from .constructions import localize, product, quotient
from .errors import ConstructionError, DomainError, HyperringError
from .expansions import (BUILTIN_NAMES, Expansion, builtin_expansion, expansion_from_pairs,
                         residual_expansion)
from .hypercore import (HyperStructure, derive_arity, mask, members, require_valid,
                        validate_structure)
from .ideals import enumerate_hyperideals

log = logging.getLogger(__name__)

BUILTINS = ("Z2", "Z3", "Z4", "Z6", "Z8", "krasner2", "sign3")


class FormatError(HyperringError, ValueError):
    """A structure or expansion file does not follow the schema."""


# --------------------------------------------------------------------------
# builtins


def _cyclic(k: int) -> HyperStructure:
    return HyperStructure.from_functions(
        f"Z{k}", k, 2, 2, 1 % k,
        lambda a, b: [(a + b) % k],
        lambda a, b: a * b % k)


def _krasner2() -> HyperStructure:
    # the Krasner hyperfield: 1 + 1 = {0, 1}
    return HyperStructure.from_functions(
        "krasner2", 2, 2, 2, 1,
        lambda a, b: [0, 1] if a == b == 1 else [a | b],
        lambda a, b: a * b)


def _sign3() -> HyperStructure:
    # the sign hyperfield {0, +, -} with + as 1 and - as 2
    def add(a, b):
        if a == 0 or b == 0:
            return [a or b]
        return [a] if a == b else [0, 1, 2]

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return 1 if a == b else 2

    return HyperStructure.from_functions("sign3", 3, 2, 2, 1, add, mul)


def builtin_structure(name: str) -> HyperStructure:
    makers = {"Z2": lambda: _cyclic(2), "Z3": lambda: _cyclic(3), "Z4": lambda: _cyclic(4),
              "Z6": lambda: _cyclic(6), "Z8": lambda: _cyclic(8),
              "krasner2": _krasner2, "sign3": _sign3}
    if name not in makers:
        raise DomainError(f"unknown builtin {name!r}; expected one of {BUILTINS}")
    return require_valid(makers[name]())


# --------------------------------------------------------------------------
# structure files


def serialize_structure(G: HyperStructure) -> str:
    """Canonical JSON text with a trailing newline."""
    f_nested = _nest(G.f_table, lambda v: members(int(v)))
    g_nested = _nest(G.g_table, int)
    doc = {"name": G.name, "m": G.m, "n": G.n, "size": G.size, "zero": G.zero, "one": G.one,
           "fTable": f_nested, "gTable": g_nested}
    if G.provenance:
        doc["provenance"] = G.provenance
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _nest(arr: np.ndarray, leaf):
    if arr.ndim == 0:
        return leaf(arr)
    return [_nest(sub, leaf) for sub in arr]


def parse_structure(text: str, validate: bool = True) -> HyperStructure:
    """Build a structure from file text; re-indexes so that the zero is element 0."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("structure file must hold a JSON object")
    missing = [k for k in ("m", "n", "size", "zero", "one", "fTable", "gTable") if k not in doc]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")
    m, n, size, zero, one = (doc[k] for k in ("m", "n", "size", "zero", "one"))
    if not all(isinstance(v, int) for v in (m, n, size, zero, one)):
        raise FormatError("m, n, size, zero and one must be integers")
    if not (0 <= zero < size and 0 <= one < size):
        raise FormatError("zero and one must name carrier elements")
    f_raw, g_raw = doc["fTable"], doc["gTable"]
    f = np.zeros((size,) * m, dtype=np.int64)
    try:
        for t in np.ndindex(*f.shape):
            leaf = f_raw
            for i in t:
                leaf = leaf[i]
            if not isinstance(leaf, list) or not all(isinstance(x, int) for x in leaf):
                raise FormatError(f"fTable entry at {t} must be an index array")
            if any(not 0 <= x < size for x in leaf):
                raise FormatError(f"fTable entry at {t} names an element out of range")
            f[t] = mask(leaf)
        g = np.array(g_raw, dtype=np.int64)
    except (IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"table does not match size {size} and arity: {exc}") from exc
    if zero != 0:
        warnings.warn(f"zero is element {zero}; swapping it with element 0", stacklevel=2)
        perm = np.arange(size)
        perm[[0, zero]] = perm[[zero, 0]]
        f, g = _permute(f, g, perm)
        one = int(perm[one])
    G = HyperStructure(doc.get("name", "unnamed"), m, n, one, f, g,
                       provenance=doc.get("provenance"))
    if validate:
        require_valid(G)
    return G


def _permute(f: np.ndarray, g: np.ndarray, perm: np.ndarray):
    """Tables of the structure relabelled by ``x -> perm[x]`` (perm an involution here)."""
    inv = np.argsort(perm)
    size = len(perm)
    bits = np.array([1 << int(perm[x]) for x in range(size)], dtype=np.int64)
    f2 = f[np.ix_(*[inv] * f.ndim)]
    out = np.zeros_like(f2)
    for x in range(size):
        out |= np.where(f2 >> x & 1, bits[x], 0)
    g2 = perm[g[np.ix_(*[inv] * g.ndim)]]
    return out, g2


# --------------------------------------------------------------------------
# expansion specs


def expansion_to_json(delta: Expansion) -> str:
    pairs = [[members(A), members(delta.table[A])] for A in sorted(delta.table,
                                                                   key=lambda a: (a.bit_count(), a))]
    return json.dumps({"label": delta.label, "pairs": pairs}, separators=(",", ":")) + "\n"


def parse_expansion(G: HyperStructure, spec: str) -> Expansion:
    """``delta0 | delta1 | deltaG | deltaM``, ``residual:<elements>`` or ``@<file>``."""
    if spec in BUILTIN_NAMES:
        return builtin_expansion(G, spec)
    if spec.startswith("residual:"):
        try:
            els = [int(x) for x in spec.split(":", 1)[1].split(",") if x.strip()]
        except ValueError as exc:
            raise FormatError(f"bad residual spec {spec!r}") from exc
        if not els or any(not 0 <= x < G.size for x in els):
            raise FormatError(f"residual spec {spec!r} names no valid elements")
        return residual_expansion(G, mask(els))
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            text = fh.read()
        try:
            doc = json.loads(text)
            return expansion_from_pairs(G, doc["pairs"], doc.get("label", "custom"))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise FormatError(f"bad expansion file: {exc}") from exc
    raise FormatError(f"unknown expansion {spec!r}")


# --------------------------------------------------------------------------
# corpora


OPERATIONS = ("product", "quotient", "localize", "deriveArity")


@dataclass
class CorpusSpec:
    seeds: list = field(default_factory=lambda: list(BUILTINS))
    max_size: int = 12
    arities: list = field(default_factory=lambda: [(3, 2), (2, 3), (3, 3)])
    operations: list = field(default_factory=lambda: list(OPERATIONS))
    localize_max_size: int = 8

    @classmethod
    def from_dict(cls, doc: dict) -> "CorpusSpec":
        return cls(seeds=list(doc.get("seeds", BUILTINS)),
                   max_size=int(doc.get("maxSize", 12)),
                   arities=[tuple(a) for a in doc.get("arities", [(3, 2), (2, 3), (3, 3)])],
                   operations=list(doc.get("operations", OPERATIONS)),
                   localize_max_size=int(doc.get("localizeMaxSize", 8)))


@dataclass
class Corpus:
    structures: list
    skipped: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.structures)

    def __len__(self):
        return len(self.structures)


def generate_corpus(spec: CorpusSpec) -> Corpus:
    """Seeds, then products of seed pairs, quotients, localizations and arity derivations.

    Every member passes validation and appears once (by exact tables); order is
    deterministic.  Failed constructions are listed in ``skipped``.
    """
    if spec.max_size > 16:
        raise DomainError("maxSize above 16 is not supported")
    bad = [op for op in spec.operations if op not in OPERATIONS]
    if bad:
        raise DomainError(f"unknown operations {bad}")
    out: list[HyperStructure] = []
    seen: set = set()
    skipped: list[str] = []

    def add(G):
        if G.size <= spec.max_size and G.key() not in seen and validate_structure(G).valid:
            seen.add(G.key())
            out.append(G)

    seeds = [builtin_structure(s) for s in spec.seeds]
    for G in seeds:
        add(G)
    if "product" in spec.operations:
        for i, G1 in enumerate(seeds):
            for G2 in seeds[i:]:
                if G1.size * G2.size <= spec.max_size and (G1.m, G1.n) == (G2.m, G2.n):
                    add(product(G1, G2))
    if "quotient" in spec.operations:
        for G in list(out):
            for A in enumerate_hyperideals(G).ideals:
                try:
                    add(quotient(G, A)[0])
                except ConstructionError as exc:
                    skipped.append(f"quotient({G.name},{members(A)}): {exc}")
    if "localize" in spec.operations:
        for G in list(out):
            if G.size > spec.localize_max_size:
                continue
            for S in multiplicative_subsets(G):
                try:
                    add(localize(G, S)[0])
                except ConstructionError as exc:
                    skipped.append(f"localize({G.name},{members(S)}): {exc}")
    if "deriveArity" in spec.operations:
        for G in seeds:
            for m, n in spec.arities:
                try:
                    add(derive_arity(G, m, n))
                except ConstructionError as exc:
                    # keep the first violation line of the report
                    lines = [ln.strip() for ln in str(exc).splitlines() if ln.startswith("  ")]
                    skipped.append(f"derive({G.name},{m},{n}): {(lines or [str(exc)])[0]}")
    for line in skipped:
        log.warning("corpus: skipped %s", line)
    return Corpus(out, skipped)


def default_corpus() -> Corpus:
    return generate_corpus(CorpusSpec())


def default_pairs(corpus: Corpus | None = None, residuals: bool = False):
    """Every corpus structure with each named expansion (and, optionally, every
    residual by a proper nonzero ideal that is itself an expansion)."""
    corpus = corpus if corpus is not None else default_corpus()
    pairs = []
    for G in corpus:
        for name in BUILTIN_NAMES:
            pairs.append((G, builtin_expansion(G, name)))
        if residuals:
            for B in enumerate_hyperideals(G).proper():
                if B == 1:
                    continue
                try:
                    pairs.append((G, residual_expansion(G, B)))
                except ConstructionError:
                    pass
    return pairs
