"""Predicates on ideals, elements and subsets, each decided by exhaustive scan.

Each ``find_*`` function returns None when the defining formula holds and a
witness otherwise; the matching ``is_*`` predicate is just ``find is None``.
Witnesses are the lexicographically least violating tuple (then the least
position), and :func:`witness_violates` re-checks one element by element.

Positional notions (primary, N, J, delta-primary, delta(0)) are checked at
every position ``i`` of every n-tuple.  For the absorbing notions a tuple has
length ``s(n-1)+1`` and a "sub-product" is the g-fold over ``(s-1)(n-1)+1``
of its positions; the leading block of positions plays a special role.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import _scan
from .errors import BudgetExceeded, DomainError
from .hypercore import HyperStructure, g_fold, members, require_valid
from .ideals import (enumerate_hyperideals, ideal_product, is_prime_ideal, jacobson_radical,
                     prime_radical, prime_violation_elementwise, radical)


def _proper(G: HyperStructure, A: int) -> None:
    if A == G.carrier:
        raise DomainError("the predicate is defined for proper hyperideals only")


def _positional(G: HyperStructure, A: int, avoid: int, outside_check: str):
    """Least ``(tuple, position)`` with ``g(x) in A`` breaking a positional rule.

    outside_check "factor": if ``x_i`` lies outside ``avoid`` then the product
    with ``x_i`` replaced by 1 must be in A (N- and J-hyperideals).
    outside_check "cofactor": if the product with ``x_i`` replaced by 1 lies
    outside ``avoid`` then ``x_i`` must be in A (delta(0)-hyperideals).
    outside_check "primary": ``x_i`` in A or the replaced product in ``avoid``.
    """
    size, n = G.size, G.n
    inA = _scan.in_set(size, A)
    inX = _scan.in_set(size, avoid)
    hit = inA[G.g_table]
    best = None
    for i in range(n):
        xi = _scan.axis(size, n, i)
        rest = _scan.with_one_at(G, i)
        if outside_check == "factor":
            viol = hit & ~inX[xi] & ~inA[rest]
        elif outside_check == "cofactor":
            viol = hit & ~inX[rest] & ~inA[xi]
        else:
            viol = hit & ~inA[xi] & ~inX[rest]
        t = _scan.first_true(viol, n, size)
        if t is not None and (best is None or t < best[0]):
            best = (t, i + 1)
    if best is None:
        return None
    return {"tuple": best[0], "position": best[1]}


# --------------------------------------------------------------------------
# classical notions


def find_prime_violation(G: HyperStructure, A: int):
    _proper(G, A)
    t = prime_violation_elementwise(G, A)
    return None if t is None else {"tuple": t}


def is_prime(G: HyperStructure, A: int) -> bool:
    """Elementwise primality, cross-checked against the ideal-level test."""
    return is_prime_ideal(G, A)


def find_primary_violation(G: HyperStructure, A: int):
    _proper(G, A)
    return _positional(G, A, radical(G, A), "primary")


def is_primary(G: HyperStructure, A: int) -> bool:
    return find_primary_violation(G, A) is None


def find_zero_divisor(G: HyperStructure):
    """Least n-tuple of nonzero elements with product 0, or None."""
    require_valid(G)
    size, n = G.size, G.n
    viol = G.g_table == 0
    for i in range(n):
        viol = viol & (_scan.axis(size, n, i) != 0)
    return _scan.first_true(viol, n, size)


def is_hyperintegral_domain(G: HyperStructure) -> bool:
    return find_zero_divisor(G) is None


def is_local(G: HyperStructure) -> bool:
    return len(enumerate_hyperideals(G).maximals()) == 1


def find_N_violation(G: HyperStructure, A: int):
    _proper(G, A)
    return _positional(G, A, prime_radical(G), "factor")


def is_N_hyperideal(G: HyperStructure, A: int) -> bool:
    return find_N_violation(G, A) is None


def find_J_violation(G: HyperStructure, A: int):
    _proper(G, A)
    return _positional(G, A, jacobson_radical(G), "factor")


def is_J_hyperideal(G: HyperStructure, A: int) -> bool:
    return find_J_violation(G, A) is None


# --------------------------------------------------------------------------
# expansion-relative notions


def find_delta0_violation(G: HyperStructure, delta, A: int):
    _proper(G, A)
    return _positional(G, A, delta.zero, "cofactor")


def is_delta0_hyperideal(G: HyperStructure, delta, A: int) -> bool:
    return find_delta0_violation(G, delta, A) is None


def find_delta_primary_violation(G: HyperStructure, delta, A: int):
    _proper(G, A)
    return _positional(G, A, delta(A), "primary")


def is_delta_primary(G: HyperStructure, delta, A: int) -> bool:
    return find_delta_primary_violation(G, delta, A) is None


def is_multiplicative_subset(G: HyperStructure, S: int) -> bool:
    """``1 in S`` and S closed under g."""
    require_valid(G)
    if not S >> G.one & 1:
        return False
    els = members(S)
    vals = G.g_table[np.ix_(*[els] * G.n)]
    return all(S >> int(v) & 1 for v in np.unique(vals))


def multiplicative_subsets(G: HyperStructure) -> list[int]:
    """Every multiplicative subset, by scanning the power set (small carriers only)."""
    require_valid(G)
    if G.size > 16:
        raise DomainError("power-set scan limited to 16 elements")
    out = [S for S in range(1, 1 << G.size) if is_multiplicative_subset(G, S)]
    return sorted(out, key=lambda s: (s.bit_count(), s))


def find_delta0_multiplicative_violation(G: HyperStructure, delta, S: int):
    """Witness against ``G - delta(0) inside S`` and
    ``g(x_1..x_{n-1}, x) in S`` whenever ``x in S`` and ``g(x_1..x_{n-1}, 1)`` avoids delta(0)."""
    require_valid(G)
    size, n = G.size, G.n
    outside = G.carrier & ~delta.zero
    if outside & ~S:
        return {"element": members(outside & ~S)[0]}
    inS = _scan.in_set(size, S)
    inD = _scan.in_set(size, delta.zero)
    viol = ~inD[_scan.with_one_at(G, n - 1)] & inS[_scan.axis(size, n, n - 1)] & ~inS[G.g_table]
    t = _scan.first_true(viol, n, size)
    return None if t is None else {"tuple": t}


def is_delta0_multiplicative_subset(G: HyperStructure, delta, S: int) -> bool:
    return find_delta0_multiplicative_violation(G, delta, S) is None


# --------------------------------------------------------------------------
# absorbing notions


def absorbing_shape(G: HyperStructure, s: int) -> tuple[int, int, list[tuple[int, ...]]]:
    """``(L, k, others)``: tuple length, block size and the non-leading blocks."""
    if s < 1:
        raise DomainError("s must be a positive integer")
    L = s * (G.n - 1) + 1
    k = (s - 1) * (G.n - 1) + 1
    others = [P for P in itertools.combinations(range(L), k) if P != tuple(range(k))]
    return L, k, others


def _absorbing_arrays(G: HyperStructure, delta, A: int, s: int):
    L, k, others = absorbing_shape(G, s)
    _scan.check_budget(G.size, L)
    inA = _scan.in_set(G.size, A)
    inD = _scan.in_set(G.size, delta.zero)
    total = _scan.fold_over(G, L, tuple(range(L)))
    lead_out = ~inA[_scan.fold_over(G, L, tuple(range(k)))]
    none_in_D = np.ones((1,) * L, dtype=bool)
    for P in others:
        none_in_D = none_in_D & ~inD[_scan.fold_over(G, L, P)]
    return L, total, lead_out, none_in_D


def find_sn_absorbing_violation(G: HyperStructure, delta, A: int, s: int, weakly: bool = False):
    _proper(G, A)
    require_valid(G)
    L, total, lead_out, none_in_D = _absorbing_arrays(G, delta, A, s)
    viol = _scan.in_set(G.size, A)[total] & lead_out & none_in_D
    if weakly:
        viol = viol & (total != 0)
    t = _scan.first_true(viol, L, G.size)
    return None if t is None else {"tuple": t}


def is_sn_absorbing_delta0(G: HyperStructure, delta, A: int, s: int) -> bool:
    return find_sn_absorbing_violation(G, delta, A, s) is None


def is_weakly_sn_absorbing_delta0(G: HyperStructure, delta, A: int, s: int) -> bool:
    return find_sn_absorbing_violation(G, delta, A, s, weakly=True) is None


def find_strongly_weakly_violation(G: HyperStructure, delta, A: int, s: int):
    """Least ordered tuple of ideals ``(A_1..A_L)`` breaking the ideal-level condition."""
    _proper(G, A)
    L, k, others = absorbing_shape(G, s)
    ideals = enumerate_hyperideals(G).ideals
    _scan.check_budget(len(ideals), L)
    D = delta.zero
    for combo in itertools.product(ideals, repeat=L):
        P = ideal_product(G, combo)
        if P == 1 or P & ~A:
            continue
        if ideal_product(G, combo[:k]) & ~A == 0:
            continue
        if any(ideal_product(G, [combo[j] for j in Q]) & ~D == 0 for Q in others):
            continue
        return {"ideals": tuple(tuple(members(B)) for B in combo)}
    return None


def is_strongly_weakly_sn_absorbing_delta0(G: HyperStructure, delta, A: int, s: int) -> bool:
    return find_strongly_weakly_violation(G, delta, A, s) is None


def find_sn_delta0_zeros(G: HyperStructure, delta, A: int, s: int) -> list[tuple[int, ...]]:
    """All tuples with zero product, leading block outside A and every other block
    outside delta(0), in lexicographic order."""
    _proper(G, A)
    require_valid(G)
    L, total, lead_out, none_in_D = _absorbing_arrays(G, delta, A, s)
    return _scan.all_true((total == 0) & lead_out & none_in_D, L, G.size)


# --------------------------------------------------------------------------
# independent re-checks of stored witnesses


def _with_one(G, t, i):
    return tuple(G.one if j == i else x for j, x in enumerate(t))


def witness_violates(G: HyperStructure, delta, A: int, flag: str, witness) -> bool:
    """Re-evaluate the defining formula of ``flag`` at ``witness`` element by element."""
    inA = lambda x: bool(A >> x & 1)  # noqa: E731
    if flag == "prime":
        t = witness["tuple"]
        return inA(G.g(*t)) and not any(inA(x) for x in t)
    if flag == "maximal":
        B = sum(1 << x for x in witness["ideal"])
        return B != A and B & A == A and B != G.carrier
    if flag in ("primary", "N", "J", "deltaZero", "deltaPrimary"):
        t, i = witness["tuple"], witness["position"] - 1
        prod, rest, xi = G.g(*t), G.g(*_with_one(G, t, i)), t[i]
        if not inA(prod):
            return False
        if flag == "N":
            return not prime_radical(G) >> xi & 1 and not inA(rest)
        if flag == "J":
            return not jacobson_radical(G) >> xi & 1 and not inA(rest)
        if flag == "deltaZero":
            return not delta.zero >> rest & 1 and not inA(xi)
        avoid = radical(G, A) if flag == "primary" else delta(A)
        return not inA(xi) and not avoid >> rest & 1
    name, _, s = flag.partition("(")
    s = int(s.rstrip(")")) if s else 1
    L, k, others = absorbing_shape(G, s)
    if name == "stronglyWeaklySnAbsorbing":
        combo = [sum(1 << x for x in B) for B in witness["ideals"]]
        P = ideal_product(G, combo)
        return (P != 1 and P & ~A == 0 and ideal_product(G, combo[:k]) & ~A != 0
                and all(ideal_product(G, [combo[j] for j in Q]) & ~delta.zero for Q in others))
    if name in ("snAbsorbing", "weaklySnAbsorbing", "deltaZeroTuple"):
        t = witness["tuple"]
        total = g_fold(G, t)
        lead = g_fold(G, t[:k])
        blocks_out = all(not delta.zero >> g_fold(G, [t[j] for j in Q]) & 1 for Q in others)
        if name == "deltaZeroTuple":
            return total == 0 and not inA(lead) and blocks_out
        ok = inA(total) and not inA(lead) and blocks_out
        return ok and (total != 0 if name == "weaklySnAbsorbing" else True)
    raise DomainError(f"unknown flag {flag!r}")


# --------------------------------------------------------------------------
# per-ideal records


@dataclass
class ClassificationRecord:
    ideal: int
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ideal": members(self.ideal),
            "flags": self.flags,
            "witnesses": {k: _jsonable(v) for k, v in self.witnesses.items()},
            "notes": self.notes,
        }


def _jsonable(w):
    if isinstance(w, dict):
        return {k: _jsonable(v) for k, v in w.items()}
    if isinstance(w, (tuple, list)):
        return [_jsonable(v) for v in w]
    return w


def classify_ideal(G: HyperStructure, delta, A: int, s_values=(1, 2)) -> ClassificationRecord:
    lat = enumerate_hyperideals(G)
    rec = ClassificationRecord(A)

    def put(flag, witness):
        rec.flags[flag] = witness is None
        if witness is not None:
            rec.witnesses[flag] = witness

    put("prime", find_prime_violation(G, A))
    # keep the cross-check with the ideal-level test
    is_prime(G, A)
    put("primary", find_primary_violation(G, A))
    bigger = [B for B in lat.proper() if B != A and B & A == A]
    put("maximal", {"ideal": tuple(members(bigger[0]))} if bigger else None)
    put("N", find_N_violation(G, A))
    put("J", find_J_violation(G, A))
    put("deltaPrimary", find_delta_primary_violation(G, delta, A))
    put("deltaZero", find_delta0_violation(G, delta, A))
    for s in s_values:
        try:
            put(f"snAbsorbing({s})", find_sn_absorbing_violation(G, delta, A, s))
            put(f"weaklySnAbsorbing({s})", find_sn_absorbing_violation(G, delta, A, s, True))
            put(f"stronglyWeaklySnAbsorbing({s})", find_strongly_weakly_violation(G, delta, A, s))
        except BudgetExceeded as exc:
            rec.notes.append(f"s={s} skipped: {exc}")
    return rec


def classify_all(G: HyperStructure, delta, s_values=(1, 2)) -> list[ClassificationRecord]:
    """One record per proper hyperideal, in lattice order."""
    require_valid(G)
    return [classify_ideal(G, delta, A, s_values) for A in enumerate_hyperideals(G).proper()]


def delta0_multiplicative_sets(G: HyperStructure, delta) -> list[int]:
    """Every delta(0)-multiplicative subset (they all contain ``G - delta(0)``)."""
    require_valid(G)
    base = G.carrier & ~delta.zero
    free = members(delta.zero)
    if len(free) > 16:
        raise DomainError("too many candidate subsets")
    out = []
    for bits in range(1 << len(free)):
        S = base | sum(1 << free[j] for j in range(len(free)) if bits >> j & 1)
        if S and is_delta0_multiplicative_subset(G, delta, S):
            out.append(S)
    return sorted(out, key=lambda s: (s.bit_count(), s))

