"""Hyperideals: recognition, the ideal lattice, generation, radicals and residuals.

Ideals are element-set masks (see :mod:`krasner.hypercore`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _scan
from .errors import ConsistencyError, DomainError, StructureAnomaly
from .hypercore import (HyperStructure, additive_inverse, fmt_set, full_mask, mask,
                        members, require_valid, set_product)


def hyperideal_violation(G: HyperStructure, S: int):
    """Return ``(reason, witness)`` for the first failed hyperideal condition, or None."""
    require_valid(G)
    size = G.size
    if S == 0 or not S & 1:
        return ("zero", ())
    els = members(S)
    if S >> size:
        raise DomainError("set names elements outside the carrier")
    vals = G.f_table[np.ix_(*[els] * G.m)]
    bad = np.argwhere(vals & ~S)
    if len(bad):
        return ("f-closed", tuple(els[i] for i in bad[0]))
    for x in els:
        if not S >> additive_inverse(G, x) & 1:
            return ("inverse-closed", (x,))
    inS = _scan.in_set(size, S)
    for i in range(G.n):
        sub = np.take(G.g_table, els, axis=i)
        bad = np.argwhere(~inS[sub])
        if len(bad):
            w = [int(v) for v in bad[0]]
            w[i] = els[w[i]]
            return ("absorbing", (i + 1,) + tuple(w))
    return None


def is_hyperideal(G: HyperStructure, S: int) -> bool:
    return hyperideal_violation(G, S) is None


def generated_ideal(G: HyperStructure, X: int) -> int:
    """Smallest hyperideal containing the set ``X``."""
    require_valid(G)
    inv = G.cache["inverse"]
    S = X | 1
    while True:
        els = members(S)
        new = S | mask(inv[x] for x in els)
        new |= int(np.bitwise_or.reduce(G.f_table[np.ix_(*[els] * G.m)], axis=None))
        new |= mask(np.unique(G.g_table[els]).tolist())
        if new == S:
            return S
        S = new


def hyperideals_by_powerset(G: HyperStructure) -> list[int]:
    """Brute-force oracle: every subset that passes :func:`is_hyperideal`."""
    require_valid(G)
    found = [s for s in range(1, 1 << G.size) if s & 1 and is_hyperideal(G, s)]
    return sorted(found, key=lambda s: (s.bit_count(), s))


@dataclass
class IdealLattice:
    home: HyperStructure
    ideals: list[int]
    prime: list[bool]
    maximal: list[bool]

    def __contains__(self, A: int) -> bool:
        return A in self._index

    def __post_init__(self):
        self._index = {A: i for i, A in enumerate(self.ideals)}

    def index(self, A: int) -> int:
        return self._index[A]

    @property
    def zero(self) -> int:
        return 1

    @property
    def top(self) -> int:
        return self.home.carrier

    def proper(self) -> list[int]:
        return [A for A in self.ideals if A != self.top]

    def primes(self) -> list[int]:
        return [A for A, p in zip(self.ideals, self.prime) if p]

    def maximals(self) -> list[int]:
        return [A for A, p in zip(self.ideals, self.maximal) if p]

    def containing(self, A: int) -> list[int]:
        return [B for B in self.ideals if B & A == A]

    def __len__(self):
        return len(self.ideals)


def _closure_enumeration(G: HyperStructure) -> list[int]:
    seen = {generated_ideal(G, 1)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for I in frontier:
            for a in range(G.size):
                if I >> a & 1:
                    continue
                J = generated_ideal(G, I | 1 << a)
                if J not in seen:
                    seen.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(seen, key=lambda s: (s.bit_count(), s))


def enumerate_hyperideals(G: HyperStructure) -> IdealLattice:
    """All hyperideals of ``G`` ordered by (cardinality, mask), with prime/maximal flags.

    Ideals are found by closing generator sets, starting from {0} and adjoining
    one element at a time.
    """
    hit = G.cache.get("lattice")
    if hit is not None:
        return hit
    require_valid(G)
    ideals = _closure_enumeration(G)
    top = G.carrier
    maximal = [A != top and not any(B != top and B != A and B & A == A for B in ideals)
               for A in ideals]
    lat = IdealLattice(G, ideals, [False] * len(ideals), maximal)
    G.cache["lattice"] = lat
    lat.prime = [A != top and prime_violation_idealwise(G, A) is None for A in ideals]
    return lat


def ideal_product(G: HyperStructure, sets) -> int:
    """Elementwise product set of ``l(n-1)+1`` sets; a value set, not closed to an ideal."""
    require_valid(G)
    key = ("prod",) + tuple(sorted(sets))
    hit = G.cache.get(key)
    if hit is None:
        hit = set_product(G, list(sets))
        G.cache[key] = hit
    return hit


def principal_ideal(G: HyperStructure, a: int) -> int:
    """``<a> = {g(r, a, 1, ..., 1) | r in G}``, checked to be a hyperideal."""
    require_valid(G)
    pad = (G.one,) * (G.n - 2)
    P = mask(G.g(r, a, *pad) for r in range(G.size))
    bad = hyperideal_violation(G, P)
    if bad is not None:
        raise StructureAnomaly(f"<{a}> = {fmt_set(P)} is not a hyperideal of {G.name}", bad)
    return P


def residual_set(G: HyperStructure, A: int, R: int) -> int:
    """``{x | g(x, R, 1, ..., 1) is inside A}``."""
    require_valid(G)
    if R == 0:
        raise DomainError("residual by the empty set")
    inA = _scan.in_set(G.size, A)
    col = G.g_table[(slice(None), slice(None)) + (G.one,) * (G.n - 2)]
    ok = inA[col[:, members(R)]].all(axis=1)
    return mask(np.flatnonzero(ok).tolist())


# ----------------------------------------------------------------------------
# primality, radicals


def prime_violation_elementwise(G: HyperStructure, A: int):
    """First n-tuple with product in A and no factor in A, or None."""
    require_valid(G)
    size, n = G.size, G.n
    inA = _scan.in_set(size, A)
    viol = inA[G.g_table]
    for i in range(n):
        viol = viol & ~inA[_scan.axis(size, n, i)]
    return _scan.first_true(viol, n, size)


def prime_violation_idealwise(G: HyperStructure, A: int):
    """First ideal n-tuple with product inside A and no member inside A, or None."""
    lat = enumerate_hyperideals(G)
    for combo in itertools.combinations_with_replacement(lat.ideals, G.n):
        if ideal_product(G, combo) & ~A == 0 and all(B & ~A for B in combo):
            return combo
    return None


def is_prime_ideal(G: HyperStructure, A: int) -> bool:
    """Primality, elementwise and ideal-level forms evaluated and required to agree."""
    if A == G.carrier:
        raise DomainError("prime hyperideals are proper")
    a = prime_violation_elementwise(G, A) is None
    b = prime_violation_idealwise(G, A) is None
    if a != b:
        raise ConsistencyError(f"prime tests disagree on {fmt_set(A)} in {G.name}")
    return a


def _meet(G: HyperStructure, sets) -> int:
    out = G.carrier
    for s in sets:
        out &= s
    return out


def radical(G: HyperStructure, A: int) -> int:
    """Intersection of the prime hyperideals containing A (the carrier if there are none)."""
    lat = enumerate_hyperideals(G)
    return _meet(G, [P for P in lat.primes() if P & A == A])


def powers(G: HyperStructure, x: int) -> set[int]:
    """Every ``g(x^(r), 1^(n-r))`` for r <= n and every ``g_fold(x^(l(n-1)+1))``."""
    n, one = G.n, G.one
    out = {int(G.g_table[(x,) * r + (one,) * (n - r)]) for r in range(1, n + 1)}
    p = x
    # the sequence x, x^n, x^(2n-1), ... becomes periodic within size steps
    for _ in range(G.size + 1):
        p = int(G.g_table[(p,) + (x,) * (n - 1)])
        out.add(p)
    return out


def radical_by_powers(G: HyperStructure, A: int) -> int:
    """Elements some power of which lands in A."""
    require_valid(G)
    return mask(x for x in range(G.size) if any(A >> p & 1 for p in powers(G, x)))


def radical_mismatches(G: HyperStructure) -> list[tuple[int, int, int]]:
    """Ideals on which the two radical computations differ: (A, by primes, by powers)."""
    out = []
    for A in enumerate_hyperideals(G).ideals:
        a, b = radical(G, A), radical_by_powers(G, A)
        if a != b:
            out.append((A, a, b))
    return out


def maximal_ideals(G: HyperStructure) -> list[int]:
    return enumerate_hyperideals(G).maximals()


def jacobson_radical(G: HyperStructure) -> int:
    return _meet(G, maximal_ideals(G))


def prime_radical(G: HyperStructure) -> int:
    return _meet(G, enumerate_hyperideals(G).primes())


def complement(G: HyperStructure, S: int) -> int:
    return full_mask(G.size) & ~S

