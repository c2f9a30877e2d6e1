"""
Independent ground truth for the quotient rings: build the defining ideal
from its generators (variable powers and partial elementary symmetric
polynomials), compute graded dimensions, normal forms, and symmetric-group
characters by exact sparse elimination over the rationals, and recover the
graded Frobenius characteristic through characters alone.

Nothing in this module uses fillings, staircase sets, or any generating
function from the rest of the package; agreement with them is the point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations
from math import factorial, gcd

from .qpoly import QPoly
from .shapes import check_partition, p_stat, partitions_of
from .symfunc import SchurExpansion

Monomial = tuple[int, ...]


def _check(n, la, s):
    la = check_partition(la)
    if s < len(la):
        raise ValueError("s must be at least the length of the partition")
    if sum(la) > n:
        raise ValueError("partition size exceeds n")
    return la


@cache
def bounded_monomials(n: int, d: int, s: int) -> tuple[Monomial, ...]:
    """Degree-d monomials in n variables with every exponent < s, sorted
    in descending lexicographic order of exponent vectors."""

    def rec(vars_left, remaining):
        if vars_left == 0:
            if remaining == 0:
                yield ()
            return
        top = min(remaining, s - 1)
        for e in range(top, -1, -1):
            for rest in rec(vars_left - 1, remaining - e):
                yield (e,) + rest

    return tuple(rec(n, d))


def elementary(d: int, support: tuple[int, ...], n: int) -> dict[Monomial, int]:
    """e_d of the variables indexed by support (0-based), in n variables."""
    out = {}
    for subset in combinations(support, d):
        exp = [0] * n
        for i in subset:
            exp[i] = 1
        out[tuple(exp)] = 1
    return out


def ideal_generators(n: int, la, s: int) -> list[dict[Monomial, int]]:
    """Variable powers x_i^s together with every e_d(S) forced by the
    partition statistic: |S| >= d > |S| - p^n_{|S|}(la)."""
    la = _check(n, la, s)
    gens = []
    for i in range(n):
        exp = [0] * n
        exp[i] = s
        gens.append({tuple(exp): 1})
    for size in range(1, n + 1):
        p = p_stat(n, size, la)
        if p == 0:
            continue
        for support in combinations(range(n), size):
            for d in range(max(1, size - p + 1), size + 1):
                gens.append(elementary(d, support, n))
    return gens


# --- sparse exact elimination ---------------------------------------------


class _IntEliminator:
    """Forward elimination over the integers with primitive sparse rows.

    Rows are dicts column -> integer; the leading entry is the smallest
    column index present (columns are pre-sorted so that smaller index
    means lexicographically larger monomial)."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @staticmethod
    def _primitive(row: dict[int, int]) -> dict[int, int]:
        g = 0
        for v in row.values():
            g = gcd(g, v)
        if g > 1:
            row = {c: v // g for c, v in row.items()}
        lead = min(row)
        if row[lead] < 0:
            row = {c: -v for c, v in row.items()}
        return row

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return self._primitive(row)
            a, b = piv[lead], row[lead]
            new = {}
            for c, v in row.items():
                new[c] = a * v
            for c, v in piv.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                row = self._primitive(row)
        return row

    def add(self, row: dict[int, int]) -> bool:
        """Reduce and, if independent, store as a new pivot row."""
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict[int, dict[int, Fraction]]:
        """Fully reduced rows (pivot entry 1, zero in other pivot
        columns), keyed by pivot column."""
        out: dict[int, dict[int, Fraction]] = {}
        for lead in sorted(self.pivots, reverse=True):
            row = {
                c: Fraction(v, self.pivots[lead][lead])
                for c, v in self.pivots[lead].items()
            }
            for c in sorted(set(row) & set(out) - {lead}):
                coeff = row.pop(c)
                if coeff:
                    for c2, v2 in out[c].items():
                        if c2 != c:
                            row[c2] = row.get(c2, Fraction(0)) - coeff * v2
                row = {k: v for k, v in row.items() if v}
            out[lead] = row
        return out


def _degree_rows(n, la, s, d):
    """Sparse integer rows spanning the degree-d piece of the ideal inside
    the span of the power-bounded monomials.  Multiples of the variable
    powers vanish after bounding, so only the elementary generators
    contribute."""
    index = {m: i for i, m in enumerate(bounded_monomials(n, d, s))}
    gens = []
    for size in range(1, n + 1):
        p = p_stat(n, size, la)
        if p == 0:
            continue
        for support in combinations(range(n), size):
            for e in range(max(1, size - p + 1), size + 1):
                gens.append(elementary(e, support, n))
    for g in gens:
        e = sum(next(iter(g)))
        if e > d:
            continue
        for u in bounded_monomials(n, d - e, s):
            row: dict[int, int] = {}
            for exp, coeff in g.items():
                prod = tuple(a + b for a, b in zip(u, exp))
                if max(prod) <= s - 1:
                    col = index[prod]
                    row[col] = row.get(col, 0) + coeff
            if row:
                yield row


def top_degree(n: int, s: int) -> int:
    return n * (s - 1)


def hilbert_function(n: int, la, s: int) -> QPoly:
    """Graded dimension of the quotient: bounded monomials minus the rank
    of the ideal's degree piece, per degree."""
    return _hilbert_cached(n, _check(n, la, s), s)


@cache
def _hilbert_cached(n: int, la, s: int) -> QPoly:
    coeffs = []
    for d in range(top_degree(n, s) + 1):
        elim = _IntEliminator()
        for row in _degree_rows(n, la, s, d):
            elim.add(row)
        coeffs.append(len(bounded_monomials(n, d, s)) - elim.rank)
    return QPoly(coeffs)


def verify_basis(n: int, la, s: int) -> bool:
    """True iff the staircase-set monomials are independent modulo the
    ideal in every degree and fill the quotient exactly."""
    from .shapes import enumerate_staircase_set

    la = _check(n, la, s)
    by_degree: dict[int, list[Monomial]] = {}
    for alpha in enumerate_staircase_set(n, la, s):
        by_degree.setdefault(sum(alpha), []).append(alpha)
    for d in range(top_degree(n, s) + 1):
        monos = bounded_monomials(n, d, s)
        index = {m: i for i, m in enumerate(monos)}
        elim = _IntEliminator()
        for row in _degree_rows(n, la, s, d):
            elim.add(row)
        dim = len(monos) - elim.rank
        members = by_degree.get(d, [])
        if len(members) != dim:
            return False
        for alpha in members:
            if max(alpha, default=0) >= s or not elim.add({index[alpha]: 1}):
                return False
    return True


class GradedQuotient:
    """Per-degree monomial basis of the quotient plus reduction data
    expressing every bounded monomial in that basis."""

    def __init__(self, n: int, la, s: int):
        la = _check(n, la, s)
        self.n, self.la, self.s = n, la, s
        self.basis: dict[int, tuple[Monomial, ...]] = {}
        # nf[monomial] = {basis monomial: Fraction}
        self.nf: dict[Monomial, dict[Monomial, Fraction]] = {}
        for d in range(top_degree(n, s) + 1):
            monos = bounded_monomials(n, d, s)
            elim = _IntEliminator()
            for row in _degree_rows(n, la, s, d):
                elim.add(row)
            rref = elim.rref()
            free = tuple(
                monos[i] for i in range(len(monos)) if i not in rref
            )
            self.basis[d] = free
            for m in free:
                self.nf[m] = {m: Fraction(1)}
            for lead, row in rref.items():
                self.nf[monos[lead]] = {
                    monos[c]: -v for c, v in row.items() if c != lead
                }

    @property
    def top_degree(self) -> int:
        return top_degree(self.n, self.s)

    def normal_form(self, m: Monomial) -> dict[Monomial, Fraction]:
        """The unique representative of m in the span of the chosen basis."""
        m = tuple(m)
        if len(m) != self.n or min(m, default=0) < 0:
            raise ValueError("bad exponent vector")
        if sum(m) > self.top_degree:
            raise ValueError("degree above the top of the quotient")
        if max(m, default=0) >= self.s:
            return {}
        return dict(self.nf[m])

    def hilbert(self) -> QPoly:
        return QPoly(
            [len(self.basis[d]) for d in range(self.top_degree + 1)]
        )


@cache
def graded_quotient(n: int, la, s: int) -> GradedQuotient:
    return GradedQuotient(n, _check(n, la, s), s)


def normal_form(m, gq: GradedQuotient) -> dict[Monomial, Fraction]:
    return gq.normal_form(m)


# --- characters -----------------------------------------------------------


def cycle_type_rep(mu, n: int) -> tuple[int, ...]:
    """A permutation of {1..n} (one-line, w[i-1] = image of i) with the
    given cycle type."""
    mu = check_partition(mu)
    if sum(mu) != n:
        raise ValueError("cycle type must be a partition of n")
    w = list(range(1, n + 1))
    start = 0
    for part in mu:
        for t in range(part):
            w[start + t] = start + 1 + (t + 1) % part
        start += part
    return tuple(w)


def permute_monomial(w, m: Monomial) -> Monomial:
    """w sends x_i to x_{w(i)}: exponent of x_{w(i)} becomes m_i."""
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[w[i] - 1] = e
    return tuple(out)


def graded_character(n: int, la, s: int, cycle_type) -> QPoly:
    """Trace of any permutation of the given cycle type on each graded
    piece of the quotient."""
    gq = graded_quotient(n, _check(n, la, s), s)
    w = cycle_type_rep(cycle_type, n)
    coeffs = []
    for d in range(gq.top_degree + 1):
        tr = Fraction(0)
        for m in gq.basis[d]:
            tr += gq.normal_form(permute_monomial(w, m)).get(m, Fraction(0))
        if tr.denominator != 1:
            raise ArithmeticError("non-integral character value")
        coeffs.append(int(tr))
    return QPoly(coeffs)


@cache
def murnaghan_nakayama(nu, mu) -> int:
    """Irreducible character of the symmetric group: chi^nu at cycle type
    mu, by the border-strip recursion on beta-sets."""
    nu = check_partition(nu)
    mu = tuple(sorted(mu, reverse=True))
    if sum(nu) != sum(mu):
        raise ValueError("character arguments must have equal size")
    if not mu:
        return 1
    r = mu[0]
    m = len(nu) if nu else 1
    beta = sorted((nu[i] if i < len(nu) else 0) + (m - 1 - i) for i in range(m))
    total = 0
    beta_set = set(beta)
    for b in beta:
        if b - r >= 0 and (b - r) not in beta_set:
            height = sum(1 for c in beta if b - r < c < b)
            new_beta = sorted(beta_set - {b} | {b - r}, reverse=True)
            new_nu = tuple(
                v - (m - 1 - i) for i, v in enumerate(new_beta) if v - (m - 1 - i) > 0
            )
            total += (-1) ** height * murnaghan_nakayama(new_nu, mu[1:])
    return total


def z_of(mu) -> int:
    """Size of the centralizer of a permutation of cycle type mu."""
    mu = tuple(mu)
    out = 1
    for part in set(mu):
        m = mu.count(part)
        out *= part**m * factorial(m)
    return out


def graded_frobenius_oracle(n: int, la, s: int) -> SchurExpansion:
    """Graded Frobenius characteristic from characters alone: the Schur
    coefficient of s_nu is sum over cycle types mu of
    chi(mu) chi^nu(mu) / z_mu, degree by degree."""
    la = _check(n, la, s)
    cycle_types = list(partitions_of(n))
    chars = {mu: graded_character(n, la, s, mu) for mu in cycle_types}
    top = max((c.degree for c in chars.values()), default=0)
    terms = {}
    for nu in cycle_types:
        coeffs = []
        for d in range(top + 1):
            val = Fraction(0)
            for mu in cycle_types:
                val += Fraction(
                    chars[mu].coefficient(d) * murnaghan_nakayama(nu, mu), z_of(mu)
                )
            if val.denominator != 1:
                raise ArithmeticError("non-integral Schur coefficient")
            coeffs.append(int(val))
        poly = QPoly(coeffs)
        if poly:
            terms[nu] = poly
    return SchurExpansion.make(n, terms)
