"""
Symmetric and quasisymmetric functions of a fixed degree n with QPoly
coefficients: Schur expansions, fundamental quasisymmetric expansions,
Kostka numbers, basis conversion, the skewing operators e_j-perp, the
q-reversed dual Hall-Littlewood functions, and LLT row-tuple tallies.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations_with_replacement, permutations, product

from .fillings import dinv, enumerate_seci, ides, reading_word
from .qpoly import ONE, QPoly, ZERO
from .shapes import Partition, check_partition, partitions_of


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


@dataclass(frozen=True)
class SchurExpansion:
    """A symmetric function of degree n written in the Schur basis."""

    n: int
    terms: tuple  # sorted tuple of (partition, QPoly)

    @staticmethod
    def make(n: int, terms: dict) -> "SchurExpansion":
        terms = _clean(terms)
        if any(sum(la) != n for la in terms):
            raise ValueError("index partitions must have size n")
        return SchurExpansion(n, tuple(sorted(terms.items())))

    def as_dict(self) -> dict[Partition, QPoly]:
        return dict(self.terms)

    def coefficient(self, la) -> QPoly:
        return self.as_dict().get(tuple(la), ZERO)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = self.as_dict()
        for la, c in other.terms:
            out[la] = out.get(la, ZERO) + c
        return SchurExpansion.make(self.n, out)

    def scale(self, f) -> "SchurExpansion":
        return SchurExpansion.make(self.n, {la: f * c for la, c in self.terms})

    def degree_part(self, d: int) -> "SchurExpansion":
        """Keep only the q^d pieces, as coefficient * q^d."""
        return SchurExpansion.make(
            self.n,
            {la: QPoly.monomial(d, c.coefficient(d)) for la, c in self.terms
             if c.coefficient(d)},
        )

    def at_one(self) -> dict[Partition, int]:
        return {la: c(1) for la, c in self.terms}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": "schur",
            "terms": [
                {"index": list(la), "coeffs": c.to_json()} for la, c in self.terms
            ],
        }


@dataclass(frozen=True)
class FundExpansion:
    """A quasisymmetric function of degree n in the fundamental basis,
    indexed by descent sets inside {1..n-1}."""

    n: int
    terms: tuple  # sorted tuple of (sorted descent tuple, QPoly)

    @staticmethod
    def make(n: int, terms: dict) -> "FundExpansion":
        cleaned = {}
        for d, c in terms.items():
            d = tuple(sorted(d))
            if any(not 1 <= x <= n - 1 for x in d):
                raise ValueError("descents must lie in {1..n-1}")
            if c:
                cleaned[d] = c
        return FundExpansion(n, tuple(sorted(cleaned.items())))

    def as_dict(self) -> dict[tuple, QPoly]:
        return dict(self.terms)

    def __add__(self, other: "FundExpansion") -> "FundExpansion":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = self.as_dict()
        for d, c in other.terms:
            out[d] = out.get(d, ZERO) + c
        return FundExpansion.make(self.n, out)

    def scale(self, f) -> "FundExpansion":
        return FundExpansion.make(self.n, {d: f * c for d, c in self.terms})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": "fundamental",
            "terms": [
                {"index": list(d), "coeffs": c.to_json()} for d, c in self.terms
            ],
        }


def hilbert_coefficient(f: FundExpansion) -> QPoly:
    """Coefficient of x_1 x_2 ... x_n: each fundamental term contributes
    its coefficient once."""
    out = ZERO
    for _, c in f.terms:
        out = out + c
    return out


# --- tableaux -------------------------------------------------------------


def _horizontal_strips(la: Partition, size: int):
    """Partitions nu with la/nu a horizontal strip of the given size."""
    la = tuple(la)

    def rec(i, remaining):
        if i == len(la):
            if remaining == 0:
                yield ()
            return
        lower = la[i + 1] if i + 1 < len(la) else 0
        for part in range(la[i], lower - 1, -1):
            removed = la[i] - part
            if removed <= remaining:
                for rest in rec(i + 1, remaining - removed):
                    yield (part,) + rest

    for nu in rec(0, size):
        yield tuple(x for x in nu if x)


def _vertical_strips(la: Partition, size: int):
    """Partitions mu with la/mu a vertical strip of the given size: at
    most one cell removed per row."""
    la = tuple(la)

    def rec(i, remaining, prev):
        if i == len(la):
            if remaining == 0:
                yield ()
            return
        for drop in (0, 1):
            part = la[i] - drop
            if part < 0 or part > prev or drop > remaining:
                continue
            for rest in rec(i + 1, remaining - drop, part):
                yield (part,) + rest

    for mu in rec(0, size, la[0] if la else 0):
        yield tuple(x for x in mu if x)


@cache
def kostka(la: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape la and content mu."""
    la, mu = check_partition(la), tuple(mu)
    if sum(la) != sum(mu):
        raise ValueError("shape and content must have equal size")
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in _horizontal_strips(la, mu[-1]))


def standard_tableau_descents(la: Partition):
    """Descent sets of the standard Young tableaux of shape la: the i such
    that i+1 sits in a strictly lower row than i."""
    la = check_partition(la)
    n = sum(la)

    # build tableaux by adding n, n-1, ... at outer corners
    def rec(shape, k):
        if k == 0:
            yield {}
            return
        for r in range(len(shape)):
            if shape[r] and (r == len(shape) - 1 or shape[r] > shape[r + 1]):
                smaller = list(shape)
                smaller[r] -= 1
                for rows in rec(tuple(smaller), k - 1):
                    rows = dict(rows)
                    rows[k] = r
                    yield rows

    for rows in rec(tuple(la), n):
        yield frozenset(i for i in range(1, n) if rows[i + 1] > rows[i])


def schur_to_fund(la: Partition) -> FundExpansion:
    """s_la as the sum of F_{n,Des(T)} over standard tableaux T."""
    la = check_partition(la)
    n = sum(la)
    terms: dict = {}
    for des in standard_tableau_descents(la):
        key = tuple(sorted(des))
        terms[key] = terms.get(key, ZERO) + ONE
    return FundExpansion.make(n, terms)


# --- basis conversion -----------------------------------------------------


def _partial_sums(gamma) -> frozenset[int]:
    out, acc = [], 0
    for g in gamma[:-1]:
        acc += g
        out.append(acc)
    return frozenset(out)


def fund_to_schur(f: FundExpansion) -> SchurExpansion:
    """Invert the standard-tableau expansion: extract monomial-symmetric
    coefficients from the fundamental expansion, check symmetry, and solve
    the unitriangular Kostka system in dominance order.

    Raises ValueError if the input is not symmetric (a symptom of an
    upstream statistic bug, so it is surfaced loudly).
    """
    n = f.n
    terms = f.as_dict()
    if n == 0:
        return SchurExpansion.make(0, {(): terms.get((), ZERO)})

    def monomial_coeff(gamma) -> QPoly:
        sums = _partial_sums(gamma)
        out = ZERO
        for d, c in terms.items():
            if set(d) <= sums:
                out = out + c
        return out

    mono: dict[Partition, QPoly] = {}
    for mu in partitions_of(n):
        c = monomial_coeff(mu)
        for gamma in set(permutations(mu)):
            if monomial_coeff(gamma) != c:
                raise ValueError(
                    f"fundamental expansion is not symmetric at content {gamma}"
                )
        mono[mu] = c

    # Kostka matrix is unitriangular against dominance; descending
    # lexicographic order is a linear extension of dominance.
    out: dict[Partition, QPoly] = {}
    for mu in partitions_of(n):  # descending lex
        c = mono[mu]
        for la, a in out.items():
            k = kostka(la, mu)
            if k:
                c = c - a * k
        if c:
            out[mu] = c
    return SchurExpansion.make(n, out)


def h_to_schur(mu: Partition) -> SchurExpansion:
    """h_mu = sum over la of K_{la,mu} s_la."""
    mu = check_partition(mu)
    n = sum(mu)
    return SchurExpansion.make(
        n, {la: QPoly((kostka(la, mu),)) for la in partitions_of(n)}
    )


def e_perp(j: int, f: SchurExpansion) -> SchurExpansion:
    """The j-th skewing operator on the Schur basis: remove vertical
    j-strips."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    out: dict[Partition, QPoly] = {}
    for la, c in f.terms:
        for mu in _vertical_strips(la, j):
            out[mu] = out.get(mu, ZERO) + c
    return SchurExpansion.make(f.n - j, out)


def e_times(j: int, f: SchurExpansion) -> SchurExpansion:
    """Multiplication by e_j (transpose of the dual Pieri rule): add
    vertical j-strips."""
    out: dict[Partition, QPoly] = {}
    for mu in partitions_of(f.n + j):
        for la in _vertical_strips(mu, j):
            c = f.coefficient(la)
            if c:
                out[mu] = out.get(mu, ZERO) + c
    return SchurExpansion.make(f.n + j, out)


# --- dual Hall-Littlewood -------------------------------------------------


def n_stat(la: Partition) -> int:
    """n(la) = sum (i-1) la_i."""
    return sum(i * part for i, part in enumerate(check_partition(la)))


@cache
def hl_qprime_rev_fund(la: Partition) -> FundExpansion:
    """Fundamental expansion of the q-reversed dual Hall-Littlewood
    function: sum of q^dinv F over standard column-increasing fillings of
    the diagram with column heights la (no basement, s = length of la)."""
    la = check_partition(la)
    n = sum(la)
    s = max(len(la), 1)
    terms: dict = {}
    for phi in enumerate_seci(n, la, s):
        if any(len(col) != h for col, h in zip(phi.columns, phi.shape)):
            continue  # no basement cells allowed here
        key = tuple(sorted(ides(reading_word(phi))))
        terms[key] = terms.get(key, ZERO) + QPoly.monomial(dinv(phi, s))
    return FundExpansion.make(n, terms)


@cache
def hl_qprime_rev(la: Partition) -> SchurExpansion:
    """Schur expansion of the q-reversed dual Hall-Littlewood function;
    the coefficients are reversed Kostka-Foulkes polynomials."""
    return fund_to_schur(hl_qprime_rev_fund(la))


# --- LLT row tuples -------------------------------------------------------


def llt_rows(rows, max_label: int) -> dict[tuple[int, ...], QPoly]:
    """Generating function of tuples of one-row semistandard fillings.

    Each entry of rows is the list of contents of a single-row shape read
    left to right (possibly empty); contents decrease by one along a row
    while the labels weakly increase.  An inversion is a pair of cells u
    (row a) and v (row b) with label(u) > label(v) and either a < b with
    equal contents, or a > b with content(u) = content(v) + 1.

    Returns a tally mapping label-multiplicity vectors (length max_label)
    to QPoly coefficients in q.
    """
    rows = [tuple(r) for r in rows]
    for r in rows:
        if any(r[t + 1] != r[t] - 1 for t in range(len(r) - 1)):
            raise ValueError("row contents must be consecutive descending")
    fillings = [
        combinations_with_replacement(range(1, max_label + 1), len(r))
        for r in rows
    ]
    tally: dict[tuple[int, ...], QPoly] = {}
    for labelings in product(*fillings):
        inv_count = 0
        for a in range(len(rows)):
            for b in range(len(rows)):
                if a == b:
                    continue
                for cu, lu in zip(rows[a], labelings[a]):
                    for cv, lv in zip(rows[b], labelings[b]):
                        if lu > lv and (
                            (a < b and cu == cv) or (a > b and cu == cv + 1)
                        ):
                            inv_count += 1
        # each unordered inversion pair is seen once (conditions are
        # asymmetric in a and b)
        weight = [0] * max_label
        for labs in labelings:
            for lab in labs:
                weight[lab - 1] += 1
        key = tuple(weight)
        tally[key] = tally.get(key, ZERO) + QPoly.monomial(inv_count)
    return {k: v for k, v in tally.items() if v}
