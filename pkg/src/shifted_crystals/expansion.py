"""Weight generating functions, brute-force Schur P/Q polynomials, and
Schur-Q-positive expansions extracted from highest-weight enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CrystalGraph, build_graph, components, highest_weight
from .tableaux import (
    SkewShape,
    StrictPartition,
    check_strict,
    decorated_filling_weights,
    enumerate_tableaux,
)


class Polynomial:
    """Multivariate polynomial with exact integer coefficients, stored as a
    map from fixed-length exponent vectors to nonzero coefficients."""

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}
        for e in self.terms:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def monomial(cls, exponents: tuple[int, ...], coeff: int = 1) -> "Polynomial":
        return cls({tuple(exponents): coeff}, len(exponents))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, max(self.nvars, other.nvars))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(terms, max(self.nvars, other.nvars))

    def scale(self, k: int) -> "Polynomial":
        return Polynomial({e: k * c for e, c in self.terms.items()}, self.nvars)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def swap_variables(self, a: int, b: int) -> "Polynomial":
        terms = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[a], e2[b] = e2[b], e2[a]
            terms[tuple(e2)] = c
        return Polynomial(terms, self.nvars)

    def is_symmetric(self) -> bool:
        return all(self.swap_variables(j, j + 1) == self for j in range(self.nvars - 1))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{j + 1}^{p}" if p > 1 else f"x{j + 1}" for j, p in enumerate(e) if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Expansion:
    """Multiset of strict partitions with positive multiplicities."""

    terms: tuple[tuple[StrictPartition, int], ...]

    def __post_init__(self) -> None:
        for sigma, mult in self.terms:
            check_strict(sigma)
            if mult < 1:
                raise ValueError("multiplicities must be positive")

    def as_dict(self) -> dict[StrictPartition, int]:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"[({','.join(map(str, s))})] x{m}" for s, m in self.terms
        )


def genfun(tableaux, n: int) -> Polynomial:
    """Sum of x^wt over the given tableaux."""
    poly = Polynomial.zero(n)
    for t in tableaux:
        poly = poly + Polynomial.monomial(t.weight())
    return poly


def genfun_weighted(tableaux, n: int) -> Polynomial:
    """Sum of 2^(number of distinct values) * x^wt: each canonical tableau
    counted with its representative-class size.  On straight shapes this
    recovers the classical Schur Q-polynomial."""
    poly = Polynomial.zero(n)
    for t in tableaux:
        distinct = sum(1 for count in t.weight() if count)
        poly = poly + Polynomial.monomial(t.weight(), 2**distinct)
    return poly


def schur_P(sigma: StrictPartition, n: int) -> Polynomial:
    """Classical Schur P-polynomial by brute force over decorated shifted
    fillings with an unprimed main diagonal; asserted symmetric."""
    sigma = check_strict(sigma)
    if not sigma:
        return Polynomial.monomial((0,) * n)
    poly = Polynomial.zero(n)
    for wt in decorated_filling_weights(SkewShape(sigma), n, diagonal_unprimed=True):
        poly = poly + Polynomial.monomial(wt)
    assert poly.is_symmetric(), f"P_{sigma} came out asymmetric"
    return poly


def schur_Q(sigma: StrictPartition, n: int) -> Polynomial:
    """Q = 2^len(sigma) * P."""
    sigma = check_strict(sigma)
    poly = schur_P(sigma, n).scale(2 ** len(sigma))
    assert poly.is_symmetric()
    return poly


def expand(shape: SkewShape, n: int) -> Expansion:
    """One strict partition per connected component: the weight of its
    unique highest-weight vertex, trailing zeros stripped."""
    graph = build_graph(shape, n)
    return expansion_of_graph(graph)


def expansion_of_graph(graph: CrystalGraph) -> Expansion:
    counts: dict[StrictPartition, int] = {}
    for comp in components(graph):
        g = highest_weight(comp)
        sigma = tuple(p for p in g.weight if p > 0)
        counts[sigma] = counts.get(sigma, 0) + 1
    terms = tuple(sorted(counts.items(), key=lambda kv: (-sum(kv[0]), kv[0])))
    return Expansion(terms)


@dataclass(frozen=True)
class ExpansionReport:
    shape: SkewShape
    n: int
    expansion: Expansion
    identity_ok: bool
    straight_matches: tuple[tuple[StrictPartition, str], ...]
    weighted_matches: tuple[tuple[StrictPartition, str], ...]

    def __str__(self) -> str:
        status = "identity OK" if self.identity_ok else "identity FAILS"
        return f"{self.expansion} ; {status}"


def _classify(poly: Polynomial, sigma: StrictPartition, n: int) -> str:
    against_p = poly == schur_P(sigma, n)
    against_q = poly == schur_Q(sigma, n)
    if against_p and against_q:
        return "P=Q"
    if against_p:
        return "P"
    if against_q:
        return "Q"
    return "neither"


def verify_expansion(shape: SkewShape, n: int) -> ExpansionReport:
    """Check genfun(ShST(shape, n)) = sum of m_sigma * genfun(ShST(sigma, n)).

    Also records, per straight sigma encountered, whether (a) the plain
    genfun and (b) the class-size-weighted genfun coincide with the
    classical P, Q, both, or neither.  Empirically (a) matches P only in
    degenerate cases while (b) is Q on every tested shape.
    """
    expansion = expand(shape, n)
    lhs = genfun(enumerate_tableaux(shape, n), n)
    rhs = Polynomial.zero(n)
    matches = []
    weighted = []
    for sigma, mult in expansion.terms:
        tableaux = enumerate_tableaux(SkewShape(sigma), n)
        straight = genfun(tableaux, n)
        rhs = rhs + straight.scale(mult)
        matches.append((sigma, _classify(straight, sigma, n)))
        weighted.append((sigma, _classify(genfun_weighted(tableaux, n), sigma, n)))
    return ExpansionReport(shape, n, expansion, lhs == rhs, tuple(matches), tuple(weighted))
