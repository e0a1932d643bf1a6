"""Finite commutative Krasner (m,n)-hyperrings stored as full operation tables.

Elements are the integers ``0 .. size-1``; index 0 is always the additive
identity.  Sets of elements (hyperoperation values, hyperideals,
multiplicative subsets) are Python ints used as bit masks, bit ``i`` standing
for element ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ArityError, AxiomError, ConstructionError, DomainError, TableError

# --------------------------------------------------------------------------
# element sets


def mask(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        out |= 1 << int(e)
    return out


def members(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def full_mask(size: int) -> int:
    return (1 << size) - 1


def fmt_set(m: int) -> str:
    return "{" + ",".join(map(str, members(m))) + "}"


# --------------------------------------------------------------------------
# the structure


class HyperStructure:
    """A finite commutative Krasner (m,n)-hyperring given by its tables.

    ``f_table`` has shape ``(size,)*m`` and holds element-set masks;
    ``g_table`` has shape ``(size,)*n`` and holds element indices.  Tables
    are checked for shape and range here; the ring axioms are checked by
    :func:`validate_structure`.
    """

    def __init__(self, name: str, m: int, n: int, one: int, f_table, g_table,
                 provenance: str | None = None, factors=None):
        if not (isinstance(m, (int, np.integer)) and isinstance(n, (int, np.integer))):
            raise TableError("arities must be integers")
        m, n = int(m), int(n)
        if m < 2 or n < 2:
            raise TableError(f"arities must be >= 2, got m={m}, n={n}")
        g = np.array(g_table, dtype=np.int64)
        f = np.array(f_table, dtype=np.int64)
        if g.ndim != n:
            raise TableError(f"gTable has {g.ndim} axes, expected n={n}")
        size = g.shape[0]
        if size < 1:
            raise TableError("carrier must be non-empty")
        if size > 62:
            raise TableError("carrier larger than 62 elements is not supported")
        if g.shape != (size,) * n:
            raise TableError(f"gTable shape {g.shape} is not {(size,) * n}")
        if f.shape != (size,) * m:
            raise TableError(f"fTable shape {f.shape} is not {(size,) * m}")
        if g.size and (g.min() < 0 or g.max() >= size):
            raise TableError("gTable entry out of range")
        if f.size and f.min() <= 0:
            bad = tuple(int(i) for i in np.argwhere(f <= 0)[0])
            raise TableError(f"empty hyperoperation value at f{bad}")
        if f.size and f.max() >= (1 << size):
            raise TableError("fTable entry names an element out of range")
        if not 0 <= int(one) < size:
            raise TableError(f"one={one} out of range")
        f.flags.writeable = False
        g.flags.writeable = False
        self.name = name
        self.size = size
        self.m = m
        self.n = n
        self.zero = 0
        self.one = int(one)
        self.f_table = f
        self.g_table = g
        self.provenance = provenance
        # (G1, G2) when built as a direct product; pair (a, b) has index a*|G2|+b
        self.factors = factors
        self._key = (size, m, n, self.one, f.tobytes(), g.tobytes())
        self._hash = hash(self._key)
        self._report: ValidationReport | None = None
        self.cache: dict = {}

    # constructors ---------------------------------------------------------

    @classmethod
    def from_functions(cls, name: str, size: int, m: int, n: int, one: int,
                       f: Callable[..., Iterable[int]], g: Callable[..., int], **kw):
        """Tabulate ``f`` (returning an iterable of elements) and ``g``."""
        ft = np.zeros((size,) * m, dtype=np.int64)
        for t in itertools.product(range(size), repeat=m):
            ft[t] = mask(f(*t))
        gt = np.zeros((size,) * n, dtype=np.int64)
        for t in itertools.product(range(size), repeat=n):
            gt[t] = g(*t)
        return cls(name, m, n, one, ft, gt, **kw)

    # evaluation -----------------------------------------------------------

    def f(self, *xs: int) -> int:
        if len(xs) != self.m:
            raise ArityError(f"f takes {self.m} arguments, got {len(xs)}")
        return int(self.f_table[xs])

    def g(self, *xs: int) -> int:
        if len(xs) != self.n:
            raise ArityError(f"g takes {self.n} arguments, got {len(xs)}")
        return int(self.g_table[xs])

    @property
    def carrier(self) -> int:
        return full_mask(self.size)

    def key(self):
        return self._key

    def renamed(self, name: str, provenance: str | None = None) -> "HyperStructure":
        G = HyperStructure(name, self.m, self.n, self.one, self.f_table, self.g_table,
                           provenance=provenance if provenance is not None else self.provenance,
                           factors=self.factors)
        G._report = self._report
        return G

    def __eq__(self, other):
        return isinstance(other, HyperStructure) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"HyperStructure({self.name!r}, size={self.size}, m={self.m}, n={self.n})"


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    explanation: str
    count: int = 1


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms(self) -> list[str]:
        return [v.axiom for v in self.violations]

    def get(self, axiom: str) -> Violation | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def __str__(self):
        if self.valid:
            return "valid"
        lines = ["invalid:"]
        for v in self.violations:
            lines.append(f"  {v.axiom} at {v.witness}: {v.explanation} ({v.count} total)")
        return "\n".join(lines)


class _Collector:
    def __init__(self):
        self.first: dict[str, Violation] = {}
        self.counts: dict[str, int] = {}

    def add(self, axiom, witness, explanation):
        self.counts[axiom] = self.counts.get(axiom, 0) + 1
        if axiom not in self.first:
            self.first[axiom] = Violation(axiom, tuple(int(x) for x in witness), explanation)

    def report(self) -> ValidationReport:
        return ValidationReport([
            Violation(v.axiom, v.witness, v.explanation, self.counts[a])
            for a, v in self.first.items()
        ])


def _f_set_at(G: HyperStructure, args: Sequence, pos: int, inner: int) -> int:
    """Union of f over the argument list with position ``pos`` ranging over ``inner``."""
    out = 0
    args = list(args)
    for c in members(inner):
        args[pos] = c
        out |= int(G.f_table[tuple(args)])
    return out


def _first_mismatch(a: np.ndarray, b: np.ndarray):
    diff = np.argwhere(a != b)
    return None if len(diff) == 0 else tuple(int(i) for i in diff[0])


def validate_structure(G: HyperStructure) -> ValidationReport:
    """Exhaustively check every Krasner (m,n)-hyperring axiom on ``G``.

    Reports the lexicographically first witness per violated axiom together
    with the number of violating instances.  The result is cached on ``G``.
    """
    if G._report is not None:
        return G._report
    size, m, n, one = G.size, G.m, G.n, G.one
    F, Gt = G.f_table, G.g_table
    col = _Collector()

    # (a) commutativity: invariance under adjacent transpositions generates S_k
    for table, k, name in ((F, m, "f-commutative"), (Gt, n, "g-commutative")):
        for i in range(k - 1):
            perm = list(range(k))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            w = _first_mismatch(table, table.transpose(perm))
            if w is not None:
                col.add(name, w, f"swapping arguments {i + 1} and {i + 2} changes the value")

    # (b) additive identity at index 0, and no other element behaves like one
    def is_identity(e):
        return all(F[(a,) + (e,) * (m - 1)] == 1 << a for a in range(size))

    for a in range(size):
        if F[(a,) + (0,) * (m - 1)] != 1 << a:
            col.add("identity", (a,) + (0,) * (m - 1), f"f(a, 0, ..., 0) = {fmt_set(F[(a,) + (0,) * (m - 1)])} != {{{a}}}")
    for e in range(1, size):
        if is_identity(e):
            col.add("identity-unique", (e,), f"{e} is a second additive identity")

    # (c) unique additive inverses
    inverse: list[int | None] = []
    for a in range(size):
        sols = [b for b in range(size) if F[(a, b) + (0,) * (m - 2)] & 1]
        if len(sols) != 1:
            col.add("inverse", (a,), f"{len(sols)} elements b with 0 in f({a}, b, 0, ...): {sols}")
            inverse.append(None)
        else:
            inverse.append(sols[0])

    # (d) reversibility: a in f(a_1..a_m) implies a_i in f(a, -a_1, .., ^i, .., -a_m)
    if all(x is not None for x in inverse):
        for t in itertools.product(range(size), repeat=m):
            for a in members(int(F[t])):
                for i in range(m):
                    rest = [inverse[t[j]] for j in range(m) if j != i]
                    if not (int(F[tuple([a] + rest)]) >> t[i]) & 1:
                        col.add("reversibility", t + (a, i + 1),
                                f"{a} in f{t} but {t[i]} not in f({a}, inverses of the others)")

    # (e) associativity, every bracketing compared with the leftmost one
    for t in itertools.product(range(size), repeat=2 * m - 1):
        base = None
        for p in range(m):
            inner = int(F[t[p:p + m]])
            val = _f_set_at(G, t[:p] + (0,) + t[p + m:], p, inner)
            if base is None:
                base = val
            elif val != base:
                col.add("f-associative", t, f"bracket at position 1 gives {fmt_set(base)}, at position {p + 1} gives {fmt_set(val)}")
    grids = np.ix_(*[np.arange(size)] * (2 * n - 1))
    first = None
    for p in range(n):
        inner = Gt[tuple(grids[p:p + n])]
        val = Gt[tuple(grids[:p]) + (inner,) + tuple(grids[p + n:])]
        val = np.broadcast_to(val, (size,) * (2 * n - 1))
        if first is None:
            first = val
            continue
        for w in np.argwhere(val != first):
            w = tuple(int(i) for i in w)
            col.add("g-associative", w, f"bracket at position 1 gives {int(first[w])}, at position {p + 1} gives {int(val[w])}")

    # (f) distributivity at every position
    for i in range(n):
        for others in itertools.product(range(size), repeat=n - 1):
            def gi(x):
                return int(Gt[others[:i] + (x,) + others[i:]])
            for b in itertools.product(range(size), repeat=m):
                lhs = mask(gi(c) for c in members(int(F[b])))
                rhs = int(F[tuple(gi(x) for x in b)])
                if lhs != rhs:
                    # witness: (position, the n-1 fixed factors, b_1..b_m)
                    col.add("distributive", (i + 1,) + others + b,
                            f"position {i + 1}: g(.., f(b), ..) = {fmt_set(lhs)} but f(g(.., b_j, ..)) = {fmt_set(rhs)}")

    # (g) zero absorbs at every position
    for i in range(n):
        sl = np.take(Gt, 0, axis=i)
        for w in np.argwhere(sl != 0):
            w = tuple(int(x) for x in w)
            col.add("zero-absorbing", w[:i] + (0,) + w[i:], f"product with 0 at position {i + 1} is {int(sl[w])}")

    # (h) scalar identity: g(a, 1, ..., 1) = a
    for a in range(size):
        v = int(Gt[(a,) + (one,) * (n - 1)])
        if v != a:
            col.add("scalar-identity", (a,) + (one,) * (n - 1), f"g(a, 1, ..., 1) = {v} != {a}")

    report = col.report()
    G._report = report
    if report.valid:
        G.cache["inverse"] = tuple(inverse)
    return report


def require_valid(G: HyperStructure) -> HyperStructure:
    report = validate_structure(G)
    if not report.valid:
        raise AxiomError(f"{G.name} is not a Krasner (m,n)-hyperring:\n{report}", report)
    return G


# --------------------------------------------------------------------------
# iterated and set-extended operations


def _fold_length(length: int, k: int) -> int:
    if length < 1 or (length - 1) % (k - 1):
        raise ArityError(f"length {length} is not of the form l({k}-1)+1")
    return (length - 1) // (k - 1)


def f_fold(G: HyperStructure, xs: Sequence[int]) -> int:
    """Left fold of f over ``l(m-1)+1`` elements, extended to sets at each stage."""
    l = _fold_length(len(xs), G.m)
    if l == 0:
        return 1 << int(xs[0])
    acc = G.f(*xs[:G.m])
    step = G.m - 1
    for start in range(G.m, len(xs), step):
        chunk = tuple(xs[start:start + step])
        acc = _f_set_at(G, (0,) + chunk, 0, acc)
    return acc


def g_fold(G: HyperStructure, xs: Sequence[int]) -> int:
    """Left fold of g over ``l(n-1)+1`` elements."""
    l = _fold_length(len(xs), G.n)
    acc = int(xs[0])
    if l == 0:
        return acc
    acc = G.g(*xs[:G.n])
    step = G.n - 1
    for start in range(G.n, len(xs), step):
        acc = int(G.g_table[(acc,) + tuple(xs[start:start + step])])
    return acc


def g_product(G: HyperStructure, xs: Sequence[int]) -> int:
    """Product of any number of elements, padding with 1 to a foldable length."""
    xs = list(xs)
    if not xs:
        return G.one
    pad = (-(len(xs) - 1)) % (G.n - 1)
    return g_fold(G, xs + [G.one] * pad)


def f_on_sets(G: HyperStructure, sets: Sequence[int]) -> int:
    """``f(A_1, ..., A_m)``: union of f over every choice of arguments."""
    if len(sets) != G.m:
        raise ArityError(f"f takes {G.m} sets, got {len(sets)}")
    if any(s == 0 for s in sets):
        raise DomainError("f is not defined on the empty set")
    sub = G.f_table[np.ix_(*[members(s) for s in sets])]
    return int(np.bitwise_or.reduce(sub, axis=None))


def set_product(G: HyperStructure, sets: Sequence[int]) -> int:
    """Value set ``{g_fold(x_1..x_k) | x_i in A_i}`` for ``k = l(n-1)+1`` sets."""
    _fold_length(len(sets), G.n)
    acc = sets[0]
    step = G.n - 1
    for start in range(1, len(sets), step):
        idx = [members(acc)] + [members(s) for s in sets[start:start + step]]
        vals = G.g_table[np.ix_(*idx)]
        acc = mask(np.unique(vals).tolist())
    return acc


def additive_inverse(G: HyperStructure, a: int) -> int:
    require_valid(G)
    return G.cache["inverse"][a]


def is_invertible(G: HyperStructure, a: int) -> bool:
    require_valid(G)
    pad = (G.one,) * (G.n - 2)
    return any(G.g(a, b, *pad) == G.one for b in range(G.size))


def derive_arity(G: HyperStructure, m: int, n: int, name: str | None = None) -> HyperStructure:
    """Raise a binary structure to arities (m, n) through the iterated operations."""
    require_valid(G)
    if G.m != 2 or G.n != 2:
        raise DomainError("derive_arity needs a binary (m=n=2) structure")
    if m < 2 or n < 2:
        raise DomainError("target arities must be >= 2")
    if (m, n) == (2, 2):
        return G
    name = name or f"{G.name}^({m},{n})"
    H = HyperStructure.from_functions(
        name, G.size, m, n, G.one,
        lambda *xs: members(f_fold(G, xs)),
        lambda *xs: g_fold(G, xs),
        provenance=f"derive({G.name},{m},{n})",
    )
    report = validate_structure(H)
    if not report.valid:
        raise ConstructionError(f"derived structure {name} is invalid:\n{report}", report)
    return H
