"""Hyperideal expansions: extensive, monotone maps on the ideal lattice.

An :class:`Expansion` is a materialised table from every ideal of its home
structure to an ideal.  The four named expansions are

* ``delta0``: A -> A
* ``delta1``: A -> rad(A)
* ``deltaG``: A -> G
* ``deltaM``: A -> intersection of the maximal ideals containing A (G if none)

plus residuals ``A -> {x | g(x, B, 1, ..) inside A}`` and composites.
"""

from __future__ import annotations

from .errors import ConstructionError, DomainError
from .hypercore import HyperStructure, ValidationReport, _Collector, fmt_set, mask, members
from .ideals import enumerate_hyperideals, radical, residual_set

BUILTIN_NAMES = ("delta0", "delta1", "deltaG", "deltaM")


class Expansion:
    def __init__(self, home: HyperStructure, table: dict[int, int], label: str, check: bool = True):
        self.home = home
        self.table = dict(table)
        self.label = label
        if check:
            report = validate_expansion(self)
            if not report.valid:
                v = report.violations[0]
                raise ConstructionError(f"{label} is not an expansion of {home.name}: "
                                        f"{v.axiom} at {v.witness}: {v.explanation}", v.witness)

    def __call__(self, A: int) -> int:
        return self.table[A]

    @property
    def zero(self) -> int:
        """The image of the zero ideal, written delta(0)."""
        return self.table[1]

    def __eq__(self, other):
        return (isinstance(other, Expansion) and self.home == other.home
                and self.table == other.table)

    def __hash__(self):
        return hash((self.home, tuple(sorted(self.table.items()))))

    def __repr__(self):
        return f"Expansion({self.label!r} on {self.home.name})"


def validate_expansion(candidate: Expansion) -> ValidationReport:
    """Check totality, ideal values, extensivity and monotonicity over the lattice."""
    lat = enumerate_hyperideals(candidate.home)
    table = candidate.table
    col = _Collector()
    for A in lat.ideals:
        if A not in table:
            col.add("total", members(A), f"no image for {fmt_set(A)}")
    for A, img in table.items():
        if A not in lat:
            col.add("domain", members(A), f"{fmt_set(A)} is not a hyperideal")
        elif img not in lat:
            col.add("ideal-valued", members(A), f"image {fmt_set(img)} is not a hyperideal")
        if img & A != A:
            col.add("extensive", members(A), f"{fmt_set(A)} not inside its image {fmt_set(img)}")
    for B in lat.ideals:
        for C in lat.ideals:
            if B != C and B & C == B and B in table and C in table:
                if table[B] & table[C] != table[B]:
                    col.add("monotone", (B, C),
                            f"{fmt_set(B)} inside {fmt_set(C)} but image {fmt_set(table[B])} "
                            f"not inside {fmt_set(table[C])}")
    return col.report()


def builtin_expansion(G: HyperStructure, name: str, lattice=None) -> Expansion:
    lat = lattice or enumerate_hyperideals(G)
    if name == "delta0":
        table = {A: A for A in lat.ideals}
    elif name == "delta1":
        table = {A: radical(G, A) for A in lat.ideals}
    elif name == "deltaG":
        table = {A: G.carrier for A in lat.ideals}
    elif name == "deltaM":
        maxes = lat.maximals()
        table = {}
        for A in lat.ideals:
            out = G.carrier
            for B in maxes:
                if B & A == A:
                    out &= B
            table[A] = out
    else:
        raise DomainError(f"unknown expansion {name!r}; expected one of {BUILTIN_NAMES}")
    return Expansion(G, table, name)


def residual_expansion(G: HyperStructure, B: int) -> Expansion:
    """``A -> residual_set(A, B)``; construction fails if this is not an expansion."""
    lat = enumerate_hyperideals(G)
    table = {A: residual_set(G, A, B) for A in lat.ideals}
    return Expansion(G, table, f"residual{fmt_set(B)}")


def compose_expansions(outer: Expansion, inner: Expansion) -> Expansion:
    if outer.home != inner.home:
        raise DomainError("expansions live on different structures")
    table = {A: outer.table[img] for A, img in inner.table.items()}
    return Expansion(outer.home, table, f"{outer.label}o{inner.label}")


def quotient_expansion(G: HyperStructure, A: int, delta: Expansion, quotient: HyperStructure,
                       projection) -> Expansion:
    """``delta_q(B/A) = delta(B)/A`` on the quotient lattice."""
    qlat = enumerate_hyperideals(quotient)
    table = {}
    for Q in qlat.ideals:
        B = projection.preimage(Q)
        if B & A != A or B not in delta.table:
            raise ConstructionError(f"preimage of {fmt_set(Q)} is not an ideal over {fmt_set(A)}", Q)
        if projection.image(B) != Q:
            raise ConstructionError(f"{fmt_set(B)}/A does not give back {fmt_set(Q)}", Q)
        table[Q] = projection.image(delta.table[B])
    return Expansion(quotient, table, f"{delta.label}_q")


def localize_expansion(G: HyperStructure, S: int, delta: Expansion, localized: HyperStructure,
                       fraction_map) -> Expansion:
    """``delta_S(S^-1 A) = S^-1 delta(A)`` on the lattice of the localization."""
    llat = enumerate_hyperideals(localized)
    glat = enumerate_hyperideals(G)
    table: dict[int, int] = {}
    for A in glat.ideals:
        I = fraction_map.extend(A)
        img = fraction_map.extend(delta.table[A])
        if I not in llat:
            raise ConstructionError(f"S^-1{fmt_set(A)} is not a hyperideal", A)
        if I in table and table[I] != img:
            raise ConstructionError(
                f"delta_S ill-defined at {fmt_set(I)}: {fmt_set(table[I])} vs {fmt_set(img)}", (I, A))
        table[I] = img
    missing = [I for I in llat.ideals if I not in table]
    if missing:
        raise ConstructionError(f"{fmt_set(missing[0])} is not of the form S^-1 A", missing[0])
    return Expansion(localized, table, f"{delta.label}_S")


def expansion_from_pairs(G: HyperStructure, pairs, label: str = "custom") -> Expansion:
    """Build a custom expansion from ``[(ideal elements, image elements), ...]``."""
    return Expansion(G, {mask(a): mask(b) for a, b in pairs}, label)
