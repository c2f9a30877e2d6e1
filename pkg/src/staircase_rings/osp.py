"""
Weak ordered set partitions (B_1 | ... | B_s) of {1..n} with lower block
size bounds from a partition, the symmetric-group action, and the bijection
with standard extended column-increasing fillings.
"""

from __future__ import annotations

from itertools import product
from math import factorial

from .fillings import ExtendedFilling
from .shapes import check_partition


def _check(n, la, s):
    la = check_partition(la)
    if s < len(la):
        raise ValueError("s must be at least the length of the partition")
    if sum(la) > n:
        raise ValueError("partition size exceeds n")
    return la


def check_osp(blocks, n: int, la, s: int) -> tuple[tuple[int, ...], ...]:
    la = _check(n, la, s)
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    if len(blocks) != s:
        raise ValueError("an ordered set partition needs exactly s blocks")
    seen = sorted(x for b in blocks for x in b)
    if seen != list(range(1, n + 1)):
        raise ValueError("blocks must partition {1..n}")
    if any(len(blocks[i]) < la[i] for i in range(len(la))):
        raise ValueError("block sizes below the partition bounds")
    return blocks


def enumerate_osp(n: int, la, s: int) -> list[tuple[tuple[int, ...], ...]]:
    """All of OP_{n,la,s} in a deterministic order (by the block index of
    each of 1..n in turn)."""
    la = _check(n, la, s)
    out = []
    for assignment in product(range(s), repeat=n):
        blocks = [[] for _ in range(s)]
        for element in range(1, n + 1):
            blocks[assignment[element - 1]].append(element)
        if all(len(blocks[i]) >= la[i] for i in range(len(la))):
            out.append(tuple(tuple(b) for b in blocks))
    return out


def count_osp(n: int, la, s: int) -> int:
    """|OP_{n,la,s}|: sum of multinomials over block-size compositions
    that dominate the partition entrywise."""
    la = _check(n, la, s)
    bounds = tuple(la) + (0,) * (s - len(la))

    def rec(i, remaining):
        if i == s:
            return 1 if remaining == 0 else 0
        total = 0
        for size in range(bounds[i], remaining + 1):
            total += rec(i + 1, remaining - size) * (
                factorial(remaining)
                // (factorial(size) * factorial(remaining - size))
            )
        return total

    return rec(0, n)


def permute_osp(sigma, blocks):
    """Apply a permutation of {1..n} (tuple: sigma[i-1] is the image of i)
    blockwise."""
    return tuple(tuple(sorted(sigma[x - 1] for x in b)) for b in blocks)


def osp_to_seci(blocks, la, s: int) -> ExtendedFilling:
    """The standard filling whose column i holds B_i sorted downward: the
    la_i smallest elements fill the diagram cells, the rest the basement."""
    n = sum(len(b) for b in blocks)
    blocks = check_osp(blocks, n, la, s)
    shape = tuple(la) + (0,) * (s - len(la))
    return ExtendedFilling(shape, tuple(tuple(sorted(b)) for b in blocks))


def seci_to_osp(phi: ExtendedFilling):
    """Inverse of osp_to_seci: read each column's labels back as a block."""
    return tuple(tuple(col) for col in phi.columns)
