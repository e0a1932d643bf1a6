"""One test per acceptance criterion.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.  Time limits are pinned in the constants below.
"""

import hashlib
import itertools
import time

import pytest

from krasner.classify import (classify_all, classify_ideal, find_sn_delta0_zeros,
                              witness_violates)
from krasner.constructions import localize, product, product_projections, quotient
from krasner.constructions import validate_homomorphism
from krasner.expansions import builtin_expansion, residual_expansion
from krasner.hypercore import HyperStructure, mask, members, validate_structure
from krasner.ideals import (enumerate_hyperideals, hyperideals_by_powerset, prime_radical,
                            radical_mismatches)
from krasner.theorems import THEOREM_IDS, run_suite
from krasner.workbench import BUILTINS, builtin_structure, default_corpus, default_pairs

AC1_SECONDS = 1.0
AC2_SECONDS = 5.0
AC4_SECONDS = 600.0
ORACLE_MAX_SIZE = 8
AC4_MIN_STRUCTURES = 25
AC4_MIN_EXPANSIONS = 4
AC4_MUST_FIRE = ("T1", "T3", "T4", "T5", "T7", "T8", "T12", "T14", "T15", "T16", "T18",
                 "T20", "T21", "T22")


# --------------------------------------------------------------------------
# AC1


@pytest.mark.criterion("AC1", "worked example on Z6 with the residual expansion by {0,3}")
def test_ac1_worked_example():
    start = time.perf_counter()
    G = builtin_structure("Z6")
    delta = residual_expansion(G, mask([0, 3]))
    A = mask([0, 2, 4])
    rec = classify_ideal(G, delta, A)
    elapsed = time.perf_counter() - start

    assert rec.flags["deltaZero"] is True
    assert rec.flags["N"] is False
    # the reported witness replays as a violation of the N condition
    assert witness_violates(G, delta, A, "N", rec.witnesses["N"])
    # the worked example's own tuple: g(2,3)=0 in A, 2 outside the prime radical, 3 outside A
    assert G.g(2, 3) == 0 and A >> 0 & 1
    assert not prime_radical(G) >> 2 & 1
    assert not A >> 3 & 1
    assert elapsed < AC1_SECONDS
    print(f"AC1 deltaZero={rec.flags['deltaZero']} N={rec.flags['N']} "
          f"witness={rec.witnesses['N']} time={elapsed:.3f}s")


# --------------------------------------------------------------------------
# AC2


def _oracle_violates(H: HyperStructure, axiom: str, w: tuple) -> bool:
    """Independent element-level check for binary structures (m = n = 2)."""
    f = lambda a, b: set(members(int(H.f_table[a, b])))  # noqa: E731
    g = lambda a, b: int(H.g_table[a, b])  # noqa: E731
    size = H.size
    if axiom == "f-commutative":
        return f(*w) != f(w[1], w[0])
    if axiom == "g-commutative":
        return g(*w) != g(w[1], w[0])
    if axiom == "identity":
        return f(w[0], 0) != {w[0]}
    if axiom == "inverse":
        return sum(0 in f(w[0], b) for b in range(size)) != 1
    if axiom == "reversibility":
        x, y, a, i = w
        neg = {c: next(b for b in range(size) if 0 in f(c, b)) for c in range(size)}
        other = y if i == 1 else x
        target = x if i == 1 else y
        return a in f(x, y) and target not in f(a, neg[other])
    if axiom == "f-associative":
        x, y, z = w
        left = set().union(*(f(u, z) for u in f(x, y)))
        right = set().union(*(f(x, u) for u in f(y, z)))
        return left != right
    if axiom == "g-associative":
        x, y, z = w
        return g(g(x, y), z) != g(x, g(y, z))
    if axiom == "distributive":
        pos, c, b1, b2 = w
        mul = (lambda u: g(u, c)) if pos == 1 else (lambda u: g(c, u))
        return {mul(u) for u in f(b1, b2)} != f(mul(b1), mul(b2))
    if axiom == "zero-absorbing":
        return 0 in w and g(*w) != 0
    if axiom == "scalar-identity":
        return g(w[0], H.one) != w[0]
    raise AssertionError(axiom)


# (axiom family, builtin, table, entry, new value, expected first witness)
CORRUPTIONS = [
    ("f-commutative", "Z3", "f", (1, 2), [1], (1, 2)),
    ("g-commutative", "Z6", "g", (2, 3), 1, (2, 3)),
    ("identity", "Z3", "f", (0, 0), [0, 1], (0, 0)),
    ("inverse", "Z3", "f", (1, 1), [0, 2], (1,)),
    ("reversibility", "sign3", "f", (1, 1), [1, 2], (1, 1, 2, 1)),
    ("f-associative", "Z4", "f", (2, 2), [2], (1, 1, 2)),
    ("g-associative", "Z4", "g", (2, 2), 1, (2, 2, 3)),
    ("distributive", "Z3", "g", (2, 2), 2, (1, 2, 1, 1)),
    ("zero-absorbing", "Z3", "g", (0, 0), 1, (0, 0)),
    ("scalar-identity", "Z3", "g", (1, 1), 2, (1, 1)),
]


def corrupt(name, table, entry, value) -> HyperStructure:
    G = builtin_structure(name)
    f, g = G.f_table.copy(), G.g_table.copy()
    if table == "f":
        f[entry] = mask(value)
    else:
        g[entry] = value
    return HyperStructure(f"{name}*", G.m, G.n, G.one, f, g)


@pytest.mark.criterion("AC2", "validator accepts the seven builtins and catches ten corruptions")
def test_ac2_axiom_validator():
    start = time.perf_counter()
    for name in BUILTINS:
        assert validate_structure(builtin_structure(name)).valid, name
    caught = []
    for axiom, name, table, entry, value, expected in CORRUPTIONS:
        H = corrupt(name, table, entry, value)
        v = validate_structure(H).get(axiom)
        assert v is not None, f"{axiom} not caught on {name}"
        assert v.witness == expected, (axiom, v.witness)
        assert _oracle_violates(H, axiom, v.witness), (axiom, v.witness)
        caught.append(axiom)
    elapsed = time.perf_counter() - start
    assert len(set(caught)) == 10
    assert elapsed < AC2_SECONDS
    print(f"AC2 builtins valid={len(BUILTINS)} corruptions caught={len(caught)} "
          f"time={elapsed:.3f}s")


# --------------------------------------------------------------------------
# AC3


@pytest.mark.criterion("AC3", "closure enumeration and radical computations agree with oracles")
def test_ac3_oracle_equivalence(corpus):
    checked, mismatches = 0, []
    for G in corpus:
        if G.size <= ORACLE_MAX_SIZE:
            checked += 1
            if enumerate_hyperideals(G).ideals != hyperideals_by_powerset(G):
                mismatches.append(("ideals", G.name))
        for A, by_primes, by_powers in radical_mismatches(G):
            mismatches.append(("radical", G.name, members(A), members(by_primes),
                               members(by_powers)))
    assert checked > 0
    assert mismatches == []
    print(f"AC3 structures checked against the power set={checked} "
          f"radicals checked on={len(corpus)} mismatches=0")


# --------------------------------------------------------------------------
# AC4


@pytest.mark.criterion("AC4", "default theorem suite: no counterexamples, statements exercised")
def test_ac4_theorem_suite(corpus, pairs, timed_suite):
    report, elapsed = timed_suite
    per_structure = {}
    for G, delta in pairs:
        per_structure.setdefault(G.name, set()).add(delta.label)
    assert len(corpus) >= AC4_MIN_STRUCTURES
    assert min(len(v) for v in per_structure.values()) >= AC4_MIN_EXPANSIONS
    assert set(report.per_theorem) == set(THEOREM_IDS)

    summary = report.summary
    print(f"AC4 items={len(pairs)} structures={len(corpus)} time={elapsed:.1f}s")
    for tid, row in summary.items():
        print(f"  {tid:<4} pass={row['pass']:<4} vacuous={row['vacuous']:<4} "
              f"counterexample={row['counterexample']:<3} hypotheses={row['hypothesisTotal']:<8} "
              f"vacuity={row['vacuityRate']:.3f}")
    assert [(r.theorem_id, r.structure, r.expansion) for r in report.counterexamples] == []
    assert report.errors == []
    silent = [tid for tid in AC4_MUST_FIRE if summary[tid]["hypothesisTotal"] == 0]
    assert silent == []
    for tid in AC4_MUST_FIRE:
        assert any(r.hypothesis_count > 0 for r in report.per_theorem[tid])
    assert elapsed < AC4_SECONDS


# --------------------------------------------------------------------------
# AC5


@pytest.mark.criterion("AC5", "classifier implication lattice holds on every corpus ideal")
def test_ac5_implication_lattice(pairs):
    violations, records = [], 0
    for G, delta in pairs:
        for rec in classify_all(G, delta):
            records += 1
            fl = rec.flags
            where = (G.name, delta.label, members(rec.ideal))
            assert "snAbsorbing(2)" in fl, (where, rec.notes)
            if fl["deltaZero"] and not fl["deltaPrimary"]:
                violations.append(("deltaZero => deltaPrimary",) + where)
            if fl["deltaZero"] and rec.ideal & ~delta.zero:
                violations.append(("deltaZero => inside delta(0)",) + where)
            if fl["deltaZero"] and not fl["snAbsorbing(2)"]:
                violations.append(("deltaZero => snAbsorbing(2)",) + where)
            for s in (1, 2):
                if fl[f"snAbsorbing({s})"] and not fl[f"weaklySnAbsorbing({s})"]:
                    violations.append((f"snAbsorbing({s}) => weakly",) + where)
    assert records > 0
    assert violations == []
    print(f"AC5 records={records} implications checked=5 per record violations=0")


# --------------------------------------------------------------------------
# AC6


def _fold(G, xs):
    """Plain-Python n-ary product of exactly 1 + j(n-1) factors, left to right."""
    acc, rest = xs[0], list(xs[1:])
    while rest:
        chunk, rest = rest[:G.n - 1], rest[G.n - 1:]
        acc = int(G.g_table[(acc, *chunk)])
    return acc


def _is_delta0_zero(G, D, A, t, s):
    L = s * (G.n - 1) + 1
    k = (s - 1) * (G.n - 1) + 1
    blocks = [P for P in itertools.combinations(range(L), k) if P != tuple(range(k))]
    return (len(t) == L and _fold(G, t) == 0 and not A >> _fold(G, t[:k]) & 1
            and all(not D >> _fold(G, [t[j] for j in P]) & 1 for P in blocks))


@pytest.mark.criterion("AC6", "delta(0)-zero tuples: Z8 example, replay, empty on absorbing ideals")
def test_ac6_delta0_zeros(pairs):
    Z8 = builtin_structure("Z8")
    d0 = builtin_expansion(Z8, "delta0")
    zeros = find_sn_delta0_zeros(Z8, d0, 1, 2)
    assert (2, 2, 2) in zeros
    assert all(_is_delta0_zero(Z8, d0.zero, 1, t, 2) for t in zeros)

    absorbing, replayed = 0, 0
    for G, delta in pairs:
        for rec in classify_all(G, delta):
            for s in (1, 2):
                found = find_sn_delta0_zeros(G, delta, rec.ideal, s)
                replayed += len(found)
                for t in found:
                    assert _is_delta0_zero(G, delta.zero, rec.ideal, t, s), (G.name, t)
                if rec.flags[f"snAbsorbing({s})"]:
                    absorbing += 1
                    assert found == [], (G.name, delta.label, members(rec.ideal), s)
    assert absorbing > 0
    print(f"AC6 Z8 zeros={len(zeros)} absorbing (ideal, s) cases={absorbing} "
          f"other zero tuples replayed={replayed}")


# --------------------------------------------------------------------------
# AC7


@pytest.mark.criterion("AC7", "quotient, localization and product sizes with valid canonical maps")
def test_ac7_construction_round_trips():
    Z6 = builtin_structure("Z6")
    Q, q = quotient(Z6, mask([0, 3]))
    L1, l1 = localize(Z6, mask([1, 2, 4, 5]))
    L2, l2 = localize(Z6, mask([1, 3]))
    P = product(builtin_structure("Z2"), builtin_structure("Z3"))
    p1, p2 = product_projections(P)
    assert (Q.size, L1.size, L2.size, P.size) == (3, 3, 2, 6)
    for H in (Q, L1, L2, P):
        assert validate_structure(H).valid, H.name
    for psi in (q, l1, l2, p1, p2):
        assert validate_homomorphism(psi).valid
    # the quotient map identifies exactly the cosets {0,3}, {1,4}, {2,5}
    classes = {}
    for x in range(6):
        classes.setdefault(q(x), set()).add(x)
    assert sorted(map(sorted, classes.values())) == [[0, 3], [1, 4], [2, 5]]
    print(f"AC7 sizes quotient={Q.size} localize(1,2,4,5)={L1.size} localize(1,3)={L2.size} "
          f"product={P.size} maps valid=5")


# --------------------------------------------------------------------------
# AC8


@pytest.mark.criterion("AC8", "two fresh full-suite runs give byte-identical JSON")
def test_ac8_determinism(timed_suite):
    first = run_suite(default_pairs(default_corpus())).to_json()
    second = run_suite(default_pairs(default_corpus())).to_json()
    assert first == second
    # the shared session run, made on warmed caches, agrees as well
    assert timed_suite[0].to_json() == first
    digest = hashlib.sha256(first.encode()).hexdigest()[:16]
    print(f"AC8 report bytes={len(first)} sha256={digest} identical=True")
