"""
Graded Frobenius characteristics and Hilbert series of the quotient rings
indexed by (n, lambda, s), assembled from the standard-filling generating
functions, plus the identities tying them together: the skewing recursion,
exact-sequence and zero-removal identities, dominance monotonicity, the
stable (s -> infinity) series, and the optional Hall-Littlewood expansion
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb

from .fillings import dinv, enumerate_seci, ides, inv, reading_word
from .qpoly import ONE, QPoly, ZERO, q_binomial, rev_at
from .shapes import (
    check_partition,
    conjugate,
    increasing_sequences,
    multi_reduction,
    partition_contains,
    partitions_of,
)
from .symfunc import (
    FundExpansion,
    SchurExpansion,
    e_perp,
    fund_to_schur,
    h_to_schur,
    hilbert_coefficient,
    hl_qprime_rev,
    n_stat,
)


@dataclass(frozen=True)
class GradedModuleSeries:
    n: int
    fund: FundExpansion
    schur: SchurExpansion
    hilbert: QPoly


def _check(n, la, s):
    la = check_partition(la)
    if s < len(la):
        raise ValueError("s must be at least the length of the partition")
    if sum(la) > n:
        raise ValueError("partition size exceeds n")
    return la


def frob(n: int, la, s: int) -> GradedModuleSeries:
    """Graded Frobenius characteristic: sum of q^inv F_{n, iDes(rw)} over
    standard extended fillings with diagram column heights la in s
    columns."""
    return _frob_cached(n, _check(n, la, s), s)


@cache
def _frob_cached(n: int, la, s: int) -> GradedModuleSeries:
    terms: dict = {}
    for phi in enumerate_seci(n, la, s):
        key = tuple(sorted(ides(reading_word(phi))))
        terms[key] = terms.get(key, ZERO) + QPoly.monomial(inv(phi))
    fund = FundExpansion.make(n, terms)
    return GradedModuleSeries(
        n=n,
        fund=fund,
        schur=fund_to_schur(fund),
        hilbert=hilbert_coefficient(fund),
    )


def hilb(n: int, la, s: int, method: str = "inv") -> QPoly:
    """Hilbert series as the generating function of inv (or dinv) over
    the standard extended fillings."""
    if method not in ("inv", "dinv"):
        raise ValueError("method must be inv or dinv")
    return _hilb_cached(n, _check(n, la, s), s, method)


@cache
def _hilb_cached(n: int, la, s: int, method: str) -> QPoly:
    out = ZERO
    for phi in enumerate_seci(n, la, s):
        stat = inv(phi) if method == "inv" else dinv(phi, s)
        out = out + QPoly.monomial(stat)
    return out


def partitions_in(n: int, s: int):
    """Partitions of n with at most s parts."""
    return partitions_of(n, max_length=s)


def ungraded_frob_h(n: int, la, s: int) -> dict[tuple, int]:
    """Ungraded Frobenius characteristic in the h basis: the product
    formula over partitions mu of n with at most s parts containing la."""
    la = _check(n, la, s)
    lc = conjugate(
        la, pad_to=max((m[0] for m in partitions_in(n, s) if m), default=1)
    )
    out: dict[tuple, int] = {}
    for mu in partitions_in(n, s):
        if not partition_contains(la, mu):
            continue
        width = mu[0] if mu else 0
        mc = conjugate(mu, pad_to=width)
        coeff = 1
        for i in range(width + 1):
            top = (s if i == 0 else mc[i - 1]) - (lc[i] if i < len(lc) else 0)
            low = (s if i == 0 else mc[i - 1]) - (mc[i] if i < width else 0)
            coeff *= comb(top, low)
        if coeff:
            out[mu] = coeff
    return out


def ungraded_frob(n: int, la, s: int) -> SchurExpansion:
    """Schur form of the ungraded Frobenius characteristic."""
    total = SchurExpansion.make(n, {})
    for mu, c in ungraded_frob_h(n, la, s).items():
        total = total + h_to_schur(mu).scale(QPoly((c,)))
    return total


def skew_recursion_check(n: int, la, s: int, j: int) -> bool:
    """e_j-perp of the graded Frobenius equals the weighted sum of smaller
    graded Frobenius characteristics over increasing index sequences."""
    la = _check(n, la, s)
    if not 1 <= j <= n:
        raise ValueError("j out of range")
    lhs = e_perp(j, frob(n, la, s).schur)
    rhs = SchurExpansion.make(n - j, {})
    for seq in increasing_sequences(s, j):
        red = multi_reduction(la, seq, s)
        if sum(red) > n - j:
            continue  # module is zero
        rhs = rhs + frob(n - j, red, s).schur.scale(QPoly.monomial(sum(seq)))
    return lhs == rhs


def one_step_zero_removal_check(n: int, la, s: int) -> bool:
    """Frob(n, la, s) = Frob(n, la + (1), s) + q^(n-k) Frob(n, la, s-1)
    when la has fewer than s parts and size below n."""
    la = _check(n, la, s)
    k = sum(la)
    if len(la) >= s or k >= n:
        raise ValueError("requires a strict zero block and k < n")
    lhs = frob(n, la, s).schur
    grown = tuple(la) + (1,)
    rhs = frob(n, grown, s).schur
    if s - 1 >= len(la):
        rhs = rhs + frob(n, la, s - 1).schur.scale(QPoly.monomial(n - k))
    return lhs == rhs


def removing_zeros_check(n: int, la, s: int) -> bool:
    """Closed form for trading empty blocks for new size-1 rows:
    Frob(n,la,s) = sum_m q^((s-l-m)(n-k-m)) qbinom(s-l, m)
                   Frob(n, la + (1^m), l+m)."""
    la = _check(n, la, s)
    ell, k = len(la), sum(la)
    if ell >= s:
        raise ValueError("requires fewer parts than s")
    lhs = frob(n, la, s).schur
    rhs = SchurExpansion.make(n, {})
    for m in range(0, min(s - ell, n - k) + 1):
        grown = tuple(la) + (1,) * m
        piece = frob(n, grown, ell + m).schur
        factor = q_binomial(s - ell, m).shift((s - ell - m) * (n - k - m))
        rhs = rhs + piece.scale(factor)
    return lhs == rhs


def monotonicity_check(n: int, la, mu, s: int) -> bool:
    """Coefficient-wise Schur comparison: enlarging the partition (in
    dominance at equal size, or by containment) can only shrink the graded
    Frobenius characteristic."""
    from .shapes import dominance_leq

    la, mu = check_partition(la), check_partition(mu)
    if sum(la) == sum(mu):
        if not dominance_leq(la, mu):
            raise ValueError("partitions are not dominance-comparable")
    elif not (sum(la) < sum(mu) and partition_contains(la, mu)):
        raise ValueError("larger partition must contain the smaller")
    big = frob(n, la, s).schur.as_dict()
    small = frob(n, mu, s).schur.as_dict()
    return all(
        c.leq_coefficientwise(big.get(nu, ZERO)) for nu, c in small.items()
    )


# --- stable series --------------------------------------------------------


def _stable_s(la, d: int) -> int:
    return max(d + 1, len(la), 1)


def rank_hilb(n: int, la, max_degree: int) -> QPoly:
    """Hilbert series of the stable (s -> infinity) quotient, truncated:
    the degree-d coefficient is read off at s = d + 1, where it has
    stabilized."""
    la = _check(n, la, max(len(la), 1))
    coeffs = [
        hilb(n, la, _stable_s(la, d)).coefficient(d) for d in range(max_degree + 1)
    ]
    return QPoly(coeffs)


def rank_frob(n: int, la, max_degree: int) -> GradedModuleSeries:
    """Degreewise splice of the graded Frobenius characteristics at
    s = d + 1, truncated above max_degree."""
    la = _check(n, la, max(len(la), 1))
    fund = FundExpansion.make(n, {})
    for d in range(max_degree + 1):
        piece = frob(n, la, _stable_s(la, d)).fund
        fund = fund + FundExpansion.make(
            n,
            {
                key: QPoly.monomial(d, c.coefficient(d))
                for key, c in piece.terms
                if c.coefficient(d)
            },
        )
    return GradedModuleSeries(
        n=n,
        fund=fund,
        schur=fund_to_schur(fund),
        hilbert=hilbert_coefficient(fund),
    )


# --- Hall-Littlewood expansion cross-check --------------------------------


def n_stat_pair(mu, la, s: int) -> int:
    """sum over i >= 1 of binom(mu'_i - la'_i, 2)."""
    width = max(mu[0] if mu else 0, la[0] if la else 0)
    mc = conjugate(mu, pad_to=width)
    lc = conjugate(la, pad_to=width)
    return sum(comb(mc[i] - lc[i], 2) for i in range(width))


def hl_expansion_series(n: int, la, s: int) -> SchurExpansion:
    """The conjectural graded formula: globally q-reverse the sum over
    mu of q^(n(mu,la)) prod qbinom(mu'_i - la'_{i+1}, mu'_i - mu'_{i+1})
    Q'_mu."""
    la = _check(n, la, s)
    width_all = max((m[0] for m in partitions_in(n, s) if m), default=1)
    lc = conjugate(la, pad_to=width_all)
    inner: dict = {}
    for mu in partitions_in(n, s):
        if not partition_contains(la, mu):
            continue
        width = mu[0] if mu else 0
        mc = conjugate(mu, pad_to=width)
        factor = QPoly.monomial(n_stat_pair(mu, la, s))
        for i in range(width + 1):
            top = (s if i == 0 else mc[i - 1]) - (lc[i] if i < len(lc) else 0)
            low = (s if i == 0 else mc[i - 1]) - (mc[i] if i < width else 0)
            factor = factor * q_binomial(top, low)
        if not factor:
            continue
        # un-reverse the dual Hall-Littlewood expansion at its top degree
        top_deg = n_stat(mu)
        for nu, c in hl_qprime_rev(mu).terms:
            qprime_coeff = rev_at(c, top_deg)
            inner[nu] = inner.get(nu, ZERO) + factor * qprime_coeff
    top = max((c.degree for c in inner.values()), default=0)
    reversed_terms = {nu: rev_at(c, top) for nu, c in inner.items()}
    return SchurExpansion.make(n, reversed_terms)


def hl_expansion_check(n: int, la, s: int) -> bool:
    """Experimental: compare the conjectural Hall-Littlewood expansion
    against the filling-generated Frobenius characteristic."""
    return hl_expansion_series(n, la, s) == frob(n, tuple(check_partition(la)), s).schur
