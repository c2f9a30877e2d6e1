"""
Partitions, compositions, reductions, dominance order, and the staircase
sets C_{n,lambda,s} whose members are the exponent vectors of the monomial
basis A_{n,lambda,s}.

Partitions are tuples of weakly decreasing positive integers (the empty
tuple is the empty partition).  Compositions are tuples of nonnegative
integers with explicit length.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def check_partition(la) -> Partition:
    la = tuple(int(x) for x in la)
    if any(x <= 0 for x in la):
        raise ValueError(f"partition parts must be positive: {la}")
    if any(la[i] < la[i + 1] for i in range(len(la) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {la}")
    return la


def conjugate(la, pad_to: int = 0) -> Composition:
    """Conjugate partition, padded with zeros to length pad_to (0 = no pad).

    >>> conjugate((3, 2, 1, 1, 1))
    (5, 2, 1)
    >>> conjugate((), 4)
    (0, 0, 0, 0)
    """
    la = check_partition(la)
    width = la[0] if la else 0
    if pad_to and pad_to < width:
        raise ValueError("pad_to smaller than the largest part")
    out = [sum(1 for x in la if x >= i) for i in range(1, width + 1)]
    out.extend([0] * (max(pad_to, width) - width))
    return tuple(out)


def p_stat(n: int, m: int, la) -> int:
    """Sum of the last m entries of the conjugate of la padded to length n.

    >>> p_stat(6, 5, (3, 2))
    3
    >>> p_stat(6, 6, (3, 2))
    5
    """
    la = check_partition(la)
    if sum(la) > n:
        raise ValueError("partition too large for n")
    if not 1 <= m <= n:
        raise ValueError("m out of range")
    conj = conjugate(la, pad_to=n)
    return sum(conj[n - m:])


def dominance_leq(la, mu) -> bool:
    """True iff la <= mu in dominance order (partial sums of la are smaller).

    >>> dominance_leq((2, 2), (3, 1))
    True
    >>> dominance_leq((3, 1), (2, 2))
    False
    """
    la, mu = check_partition(la), check_partition(mu)
    if sum(la) != sum(mu):
        raise ValueError("dominance compares partitions of equal size")
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def partition_contains(inner, outer) -> bool:
    """True iff the diagram of inner fits inside the diagram of outer."""
    inner, outer = check_partition(inner), check_partition(outer)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def sort_to_partition(alpha) -> Partition:
    """Sort a weak composition decreasingly and drop zeros."""
    return tuple(sorted((x for x in alpha if x), reverse=True))


def reduction(la, i: int) -> Partition:
    """The i-th reduction: decrement part i+1, resort, drop a zero.

    >>> reduction((6, 6, 4, 4, 1), 2)
    (6, 6, 4, 3, 1)
    >>> reduction((1,), 0)
    ()
    """
    la = check_partition(la)
    if not 0 <= i < len(la):
        raise ValueError("reduction index out of range")
    parts = list(la)
    parts[i] -= 1
    return sort_to_partition(parts)


def multi_reduction(la, seq, s: int) -> Partition:
    """Iterated reduction la^(I): process the entries of I right to left,
    reducing when the entry is below the current length and skipping it
    otherwise.

    >>> multi_reduction((2, 1), (0, 2), 3)
    (1, 1)
    >>> multi_reduction((2, 2), (0, 1), 2)
    (1, 1)
    """
    la = check_partition(la)
    if s < len(la):
        raise ValueError("s below the length of the partition")
    if any(not 0 <= i <= s - 1 for i in seq):
        raise ValueError("reduction entry out of range")
    for i in reversed(tuple(seq)):
        if i < len(la):
            la = reduction(la, i)
    return la


def increasing_sequences(s: int, j: int) -> list[Composition]:
    """All strictly increasing j-sequences of nonnegative integers < s.

    >>> increasing_sequences(3, 2)
    [(0, 1), (0, 2), (1, 2)]
    """
    return [tuple(c) for c in combinations(range(s), j)]


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None):
    """Yield partitions of n, largest part first within each, in
    descending lexicographic order (so (n) first, (1,...,1) last)."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_length)


# --- staircase sets -------------------------------------------------------


def _check_args(n: int, la, s: int):
    la = check_partition(la)
    if s < len(la):
        raise ValueError("s must be at least the length of the partition")
    if sum(la) > n:
        raise ValueError("partition size exceeds n")
    return la


@cache
def _staircase_members(n: int, la: Partition, s: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    k = sum(la)
    out = []
    for i in range(s):
        if i < len(la):
            sub = _staircase_members(n - 1, reduction(la, i), s)
        elif k < n:
            sub = _staircase_members(n - 1, la, s)
        else:
            continue
        out.extend(alpha + (i,) for alpha in sub)
    return tuple(out)


def enumerate_staircase_set(n: int, la, s: int) -> list[Composition]:
    """All of C_{n,la,s} in a deterministic order (last coordinate
    ascending, recursive order inside).

    >>> len(enumerate_staircase_set(4, (2, 1), 3))
    22
    """
    la = _check_args(n, la, s)
    return list(_staircase_members(n, la, s))


def in_staircase_set(alpha, n: int, la, s: int) -> bool:
    """Membership alpha in C_{n,la,s} by the branching recursion:
    alpha is a member iff its last entry is an admissible branch and the
    truncation is a member for the correspondingly reduced partition.

    >>> in_staircase_set((0, 1, 0, 2), 4, (2, 1), 3)
    True
    >>> in_staircase_set((2, 0, 0, 2), 4, (2, 1), 3)
    False
    """
    la = _check_args(n, la, s)
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != n:
        raise ValueError("composition length must equal n")
    if any(x < 0 for x in alpha):
        raise ValueError("composition entries must be nonnegative")
    return _in_staircase(alpha, la, s)


@cache
def _in_staircase(alpha: Composition, la: Partition, s: int) -> bool:
    n = len(alpha)
    if n == 0:
        return la == ()
    last = alpha[-1]
    if last > s - 1:
        return False
    if last < len(la):
        return _in_staircase(alpha[:-1], reduction(la, last), s)
    if sum(la) < n:
        return _in_staircase(alpha[:-1], la, s)
    return False


# --- slow shuffle oracle --------------------------------------------------


def staircases(n: int, la, s: int) -> set[Composition]:
    """All (n,la,s)-staircases: shuffles of the words (0,1,...,la'_j - 1)
    for j = 1..la_1 together with n-|la| copies of s-1.  Exponential; kept
    as a cross-check oracle for the recursion.
    """
    la = _check_args(n, la, s)
    conj = conjugate(la)
    words = [tuple(range(conj[j])) for j in range(len(conj))]
    words.append((s - 1,) * (n - sum(la)))
    words = [w for w in words if w]

    def shuffles(ws):
        if not ws:
            yield ()
            return
        seen = set()
        for idx in range(len(ws)):
            head = ws[idx][0]
            if head in seen:
                continue
            seen.add(head)
            rest = list(ws)
            if len(ws[idx]) == 1:
                del rest[idx]
            else:
                rest[idx] = ws[idx][1:]
            for tail in shuffles(tuple(rest)):
                yield (head,) + tail

    return set(shuffles(tuple(words)))


def in_staircase_set_slow(alpha, n: int, la, s: int) -> bool:
    """Direct containment test against every staircase (slow oracle)."""
    alpha = tuple(alpha)
    return any(
        all(a <= b for a, b in zip(alpha, st)) for st in staircases(n, la, s)
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
