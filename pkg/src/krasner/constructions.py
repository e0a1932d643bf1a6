"""Quotients, direct products, localizations and homomorphisms between structures.

Every construction validates what it builds: the result must pass
:func:`validate_structure` and the canonical map must pass
:func:`validate_homomorphism`.  Ill-defined induced operations raise
:class:`ConstructionError` carrying the offending representatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ArityError, ConstructionError, DomainError, StructureAnomaly
from .hypercore import (HyperStructure, _Collector, ValidationReport, fmt_set, g_product,
                        mask, members, require_valid, validate_structure)
from .classify import (is_multiplicative_subset, is_sn_absorbing_delta0,
                       is_strongly_weakly_sn_absorbing_delta0)
from .ideals import enumerate_hyperideals, ideal_product, is_hyperideal
from .results import Tally, TheoremResult


@dataclass
class HomMap:
    """A total map of carriers ``source -> target`` given as an index tuple."""

    source: HyperStructure
    target: HyperStructure
    mapping: tuple
    kind: str = "general"
    # for localization maps: (numerator, denominator) -> fraction class index
    fraction_of: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        self.mapping = tuple(int(v) for v in self.mapping)
        if len(self.mapping) != self.source.size:
            raise DomainError("map is not total on the source carrier")
        if any(not 0 <= v < self.target.size for v in self.mapping):
            raise DomainError("map sends an element outside the target carrier")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self, A: int) -> int:
        return mask(self.mapping[x] for x in members(A))

    def preimage(self, B: int) -> int:
        return mask(x for x, y in enumerate(self.mapping) if B >> y & 1)

    @property
    def kernel(self) -> int:
        return self.preimage(1)

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size

    def extend(self, A: int) -> int:
        """``S^-1 A``: the fraction classes with a numerator in A (localization maps only)."""
        if self.fraction_of is None:
            raise DomainError("extend is only defined for localization maps")
        return mask(c for (a, _), c in self.fraction_of.items() if A >> a & 1)


def identity_map(G: HyperStructure) -> HomMap:
    return HomMap(G, G, tuple(range(G.size)), "embedding")


def validate_homomorphism(psi: HomMap) -> ValidationReport:
    """Check f preserved setwise, g preserved and ``1 -> 1`` over every tuple."""
    G1, G2 = psi.source, psi.target
    col = _Collector()
    if G1.m != G2.m or G1.n != G2.n:
        col.add("arity", (G1.m, G1.n, G2.m, G2.n), "source and target arities differ")
        return col.report()
    if psi(G1.one) != G2.one:
        col.add("one", (G1.one,), f"1 is sent to {psi(G1.one)}, not {G2.one}")
    mp = np.array(psi.mapping)
    images: dict[int, int] = {}
    for t in itertools.product(range(G1.size), repeat=G1.m):
        v = int(G1.f_table[t])
        lhs = images.get(v)
        if lhs is None:
            lhs = images[v] = psi.image(v)
        rhs = int(G2.f_table[tuple(mp[list(t)])])
        if lhs != rhs:
            col.add("f-preserved", t, f"psi(f{t}) = {fmt_set(lhs)} but f(psi(..)) = {fmt_set(rhs)}")
    lhs = mp[G1.g_table]
    rhs = G2.g_table[tuple(np.meshgrid(*[mp] * G1.n, indexing="ij"))]
    for t in np.argwhere(lhs != rhs):
        t = tuple(int(v) for v in t)
        col.add("g-preserved", t, f"psi(g{t}) = {int(lhs[t])} but g(psi(..)) = {int(rhs[t])}")
    return col.report()


def _require_hom(psi: HomMap, what: str) -> HomMap:
    report = validate_homomorphism(psi)
    if not report.valid:
        v = report.violations[0]
        raise ConstructionError(f"{what} is not a homomorphism: {v.axiom} at {v.witness}", v.witness)
    return psi


def _require_structure(H: HyperStructure, what: str) -> HyperStructure:
    report = validate_structure(H)
    if not report.valid:
        v = report.violations[0]
        raise ConstructionError(f"{what} is not a Krasner hyperring: {v.axiom} at {v.witness}: "
                                f"{v.explanation}", v.witness)
    return H


# --------------------------------------------------------------------------
# quotient


def cosets(G: HyperStructure, A: int) -> list[int]:
    """Distinct cosets ``f(a, A, 0, .., 0)`` ordered by least member."""
    require_valid(G)
    zeros = (0,) * (G.m - 2)
    out = set()
    for a in range(G.size):
        out.add(int(np.bitwise_or.reduce(
            [G.f(a, x, *zeros) for x in members(A)])))
    return sorted(out, key=lambda c: (c & -c))


def quotient(G: HyperStructure, A: int) -> tuple[HyperStructure, HomMap]:
    """``G/A`` on the cosets of the hyperideal A, with its projection."""
    require_valid(G)
    if not is_hyperideal(G, A):
        raise DomainError(f"{fmt_set(A)} is not a hyperideal of {G.name}")
    cs = cosets(G, A)
    proj = [-1] * G.size
    for i, c in enumerate(cs):
        for a in members(c):
            if proj[a] != -1:
                raise ConstructionError(f"cosets of {fmt_set(A)} overlap at {a}", (a,))
            proj[a] = i
    k = len(cs)
    f_q = np.zeros((k,) * G.m, dtype=np.int64)
    seen_f = np.zeros((k,) * G.m, dtype=bool)
    for t in itertools.product(range(G.size), repeat=G.m):
        key = tuple(proj[x] for x in t)
        val = G.f_table[t]
        out = mask(proj[y] for y in members(int(val)))
        if seen_f[key] and f_q[key] != out:
            raise ConstructionError(f"induced f depends on representatives at {t}", t)
        f_q[key] = out
        seen_f[key] = True
    # the setwise image must be a union of whole cosets
    for key in itertools.product(range(k), repeat=G.m):
        setwise = int(np.bitwise_or.reduce(G.f_table[np.ix_(*[members(cs[i]) for i in key])],
                                           axis=None))
        union = 0
        for i in members(int(f_q[key])):
            union |= cs[i]
        if setwise != union:
            raise ConstructionError(f"f on cosets {key} is not a union of cosets", key)
    g_q = np.zeros((k,) * G.n, dtype=np.int64)
    seen_g = np.zeros((k,) * G.n, dtype=bool)
    for t in itertools.product(range(G.size), repeat=G.n):
        key = tuple(proj[x] for x in t)
        out = proj[int(G.g_table[t])]
        if seen_g[key] and g_q[key] != out:
            raise ConstructionError(f"induced g depends on representatives at {t}", t)
        g_q[key] = out
        seen_g[key] = True
    label = fmt_set(A)
    Q = HyperStructure(f"{G.name}/{label}", G.m, G.n, proj[G.one], f_q, g_q,
                       provenance=f"quotient({G.name},{label})")
    _require_structure(Q, Q.name)
    psi = _require_hom(HomMap(G, Q, tuple(proj), "projection"), f"projection onto {Q.name}")
    return Q, psi


# --------------------------------------------------------------------------
# product


def product(G1: HyperStructure, G2: HyperStructure) -> HyperStructure:
    """Direct product; the pair ``(a, b)`` is element ``a*|G2| + b``."""
    require_valid(G1)
    require_valid(G2)
    if (G1.m, G1.n) != (G2.m, G2.n):
        raise ArityError(f"arities differ: ({G1.m},{G1.n}) vs ({G2.m},{G2.n})")
    s2 = G2.size

    def f(*xs):
        A = G1.f(*(x // s2 for x in xs))
        B = G2.f(*(x % s2 for x in xs))
        return [a * s2 + b for a in members(A) for b in members(B)]

    def g(*xs):
        return G1.g(*(x // s2 for x in xs)) * s2 + G2.g(*(x % s2 for x in xs))

    P = HyperStructure.from_functions(
        f"{G1.name}x{G2.name}", G1.size * s2, G1.m, G1.n, G1.one * s2 + G2.one, f, g,
        provenance=f"product({G1.name},{G2.name})", factors=(G1, G2))
    return _require_structure(P, P.name)


def product_projections(P: HyperStructure) -> tuple[HomMap, HomMap]:
    if P.factors is None:
        raise DomainError(f"{P.name} was not built as a product")
    G1, G2 = P.factors
    s2 = G2.size
    return (HomMap(P, G1, tuple(x // s2 for x in range(P.size)), "projection"),
            HomMap(P, G2, tuple(x % s2 for x in range(P.size)), "projection"))


def rectangle(P: HyperStructure, A1: int, A2: int) -> int:
    """The subset ``A1 x A2`` of a product."""
    s2 = P.factors[1].size
    return mask(a * s2 + b for a in members(A1) for b in members(A2))


# --------------------------------------------------------------------------
# localization


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def localize(G: HyperStructure, S: int) -> tuple[HyperStructure, HomMap]:
    """Fractions ``a/s`` with ``s in S``, and the canonical map ``a -> a/1``.

    ``a/s = b/t`` when some ``u in S`` has ``u(at) = u(bs)``.  Addition of
    fractions puts them over the product of all denominators.
    """
    require_valid(G)
    if not is_multiplicative_subset(G, S):
        raise DomainError(f"{fmt_set(S)} is not a multiplicative subset of {G.name}")
    den = members(S)
    pairs = [(a, s) for a in range(G.size) for s in den]
    pid = {p: i for i, p in enumerate(pairs)}

    def prod(*xs):
        return g_product(G, xs)

    parent = list(range(len(pairs)))
    for (a, s), (b, t) in itertools.combinations(pairs, 2):
        at, bs = prod(a, t), prod(b, s)
        if any(prod(u, at) == prod(u, bs) for u in den):
            ra, rb = _find(parent, pid[(a, s)]), _find(parent, pid[(b, t)])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    # class index by least representative pair; pairs are already in that order
    roots = sorted({_find(parent, i) for i in range(len(pairs))})
    cls_index = {r: k for k, r in enumerate(roots)}
    fraction_of = {p: cls_index[_find(parent, pid[p])] for p in pairs}
    reps: list[list[tuple[int, int]]] = [[] for _ in roots]
    for p in pairs:
        reps[fraction_of[p]].append(p)
    k = len(roots)
    m, n = G.m, G.n

    f_l = np.zeros((k,) * m, dtype=np.int64)
    for key in itertools.product(range(k), repeat=m):
        value = None
        for choice in itertools.product(*[reps[c] for c in key]):
            denoms = [s for _, s in choice]
            total = prod(*denoms)
            nums = [prod(a, *(denoms[:i] + denoms[i + 1:])) for i, (a, _) in enumerate(choice)]
            out = mask(fraction_of[(c, total)] for c in members(G.f(*nums)))
            if value is None:
                value = out
            elif value != out:
                raise ConstructionError(
                    f"fraction sum depends on representatives at {choice}", choice)
        f_l[key] = value
    g_l = np.zeros((k,) * n, dtype=np.int64)
    for key in itertools.product(range(k), repeat=n):
        value = None
        for choice in itertools.product(*[reps[c] for c in key]):
            out = fraction_of[(prod(*(a for a, _ in choice)), prod(*(s for _, s in choice)))]
            if value is None:
                value = out
            elif value != out:
                raise ConstructionError(
                    f"fraction product depends on representatives at {choice}", choice)
        g_l[key] = value
    label = fmt_set(S)
    L = HyperStructure(f"{G.name}[{label}^-1]", m, n, fraction_of[(G.one, G.one)], f_l, g_l,
                       provenance=f"localize({G.name},{label})")
    _require_structure(L, L.name)
    psi = HomMap(G, L, tuple(fraction_of[(a, G.one)] for a in range(G.size)), "general",
                 fraction_of=fraction_of)
    _require_hom(psi, f"canonical map into {L.name}")
    return L, psi


# --------------------------------------------------------------------------
# transport of ideals and expansions


def is_delta_gamma_homomorphism(psi: HomMap, delta, gamma) -> bool:
    return delta_gamma_violation(psi, delta, gamma) is None


def delta_gamma_violation(psi: HomMap, delta, gamma):
    """First target ideal B with ``delta(psi^-1 B) != psi^-1 gamma(B)``, or None."""
    for B in enumerate_hyperideals(psi.target).ideals:
        pre = psi.preimage(B)
        if pre not in delta.table:
            return B
        if delta(pre) != psi.preimage(gamma(B)):
            return B
    return None


def ideal_image(psi: HomMap, A: int) -> int:
    """Pointwise image; checked to be a hyperideal when psi is onto with kernel inside A."""
    out = psi.image(A)
    if psi.surjective and psi.kernel & A == psi.kernel and not is_hyperideal(psi.target, out):
        raise StructureAnomaly(f"image of {fmt_set(A)} is not a hyperideal", A)
    return out


def ideal_preimage(psi: HomMap, B: int) -> int:
    out = psi.preimage(B)
    if not is_hyperideal(psi.source, out):
        raise StructureAnomaly(f"preimage of {fmt_set(B)} is not a hyperideal", B)
    return out


# --------------------------------------------------------------------------
# Nakayama-type check on the canonical self-module


def nakayama_check(G: HyperStructure, delta, A: int, s: int) -> TheoremResult:
    """For A strongly weakly but not (s,n)-absorbing: ``A^(s(n-1)+1) = 0`` and
    ``k(A, 1, .., 1, M) = M`` forces ``M = 0`` for every ideal M.

    ``k(a_1..a_{n-1}, x) = g(a_1..a_{n-1}, x)`` is the action of G on its
    ideals; with n-2 padding ones it takes exactly n arguments.
    """
    tally = Tally("T25", G.name, delta.label)
    if not is_strongly_weakly_sn_absorbing_delta0(G, delta, A, s) \
            or is_sn_absorbing_delta0(G, delta, A, s):
        return tally.result()
    power = ideal_product(G, [A] * (s * (G.n - 1) + 1))
    tally.check(power == 1, {"A": members(A), "s": s, "part": "i", "product": members(power)})
    ones = [1 << G.one] * (G.n - 2)
    for M in enumerate_hyperideals(G).ideals:
        if ideal_product(G, [A] + ones + [M]) == M:
            tally.check(M == 1, {"A": members(A), "s": s, "part": "ii", "M": members(M)})
    return tally.result()
