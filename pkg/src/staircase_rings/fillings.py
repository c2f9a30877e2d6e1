"""
Extended column-increasing fillings: diagrams with column heights given by
a weak composition alpha, plus "basement" cells hanging below row 1 of each
column.  Carries the two statistics inv and dinv, their cell-by-cell codes,
and the two insertion algorithms inverting the codes.

Coordinates are Cartesian: (column i, row j), with diagram cells at rows
1..alpha_i (row alpha_i on top) and basement cells at rows 0, -1, ...
Columns weakly increase downward, basement included.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .shapes import Composition, sort_to_partition


@dataclass(frozen=True)
class ExtendedFilling:
    """shape[i] is the diagram height of column i+1; columns[i] is the full
    label sequence of column i+1 read top to bottom (diagram rows
    alpha_i..1, then basement rows 0, -1, ...)."""

    shape: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.shape) != len(self.columns):
            raise ValueError("one label sequence per column required")
        if any(h < 0 for h in self.shape):
            raise ValueError("column heights must be nonnegative")
        for h, col in zip(self.shape, self.columns):
            if len(col) < h:
                raise ValueError("diagram cells must all be labeled")
            if any(col[t] > col[t + 1] for t in range(len(col) - 1)):
                raise ValueError("columns must weakly increase downward")
            if any(lab < 1 for lab in col):
                raise ValueError("labels must be positive")

    @property
    def s(self) -> int:
        return len(self.shape)

    @property
    def n(self) -> int:
        return sum(len(col) for col in self.columns)

    def basement_sizes(self) -> tuple[int, ...]:
        return tuple(len(col) - h for col, h in zip(self.columns, self.shape))

    def label(self, i: int, j: int) -> int:
        """Label at column i (1-based), row j."""
        return self.columns[i - 1][self.shape[i - 1] - j]

    def has_cell(self, i: int, j: int) -> bool:
        if not 1 <= i <= self.s:
            return False
        h = self.shape[i - 1]
        return h - len(self.columns[i - 1]) < j <= h

    def cells(self) -> list[tuple[int, int, int]]:
        """(column, row, label) for every cell."""
        out = []
        for c, (h, col) in enumerate(zip(self.shape, self.columns), start=1):
            for t, lab in enumerate(col):
                out.append((c, h - t, lab))
        return out

    def is_standard(self) -> bool:
        labels = sorted(lab for _, _, lab in self.cells())
        return labels == list(range(1, self.n + 1))

    def content(self, max_label: int | None = None) -> tuple[int, ...]:
        """Multiplicity vector of the labels 1..max_label."""
        if max_label is None:
            max_label = max((lab for _, _, lab in self.cells()), default=0)
        out = [0] * max_label
        for _, _, lab in self.cells():
            out[lab - 1] += 1
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "columns": [
                {"diagram": list(col[:h]), "basement": list(col[h:])}
                for h, col in zip(self.shape, self.columns)
            ],
        }

    @staticmethod
    def from_json(data) -> "ExtendedFilling":
        shape = tuple(data["shape"])
        cols = tuple(
            tuple(c["diagram"]) + tuple(c["basement"]) for c in data["columns"]
        )
        return ExtendedFilling(shape, cols)


def _rows_top_to_bottom(phi: ExtendedFilling):
    """Yield (row index, [(column, label), ...]) for all nonempty rows,
    top row first."""
    if phi.n == 0:
        return
    top = max(phi.shape, default=0)
    bottom = min(h - len(col) + 1 for h, col in zip(phi.shape, phi.columns))
    for j in range(top, bottom - 1, -1):
        row = [
            (i, phi.label(i, j)) for i in range(1, phi.s + 1) if phi.has_cell(i, j)
        ]
        if row:
            yield j, row


def reading_word(phi: ExtendedFilling) -> tuple[int, ...]:
    """Diagram rows top to bottom left to right, then basement rows the
    same way (rows 0, -1, ... come after every diagram row)."""
    out = []
    for _, row in _rows_top_to_bottom(phi):
        out.extend(lab for _, lab in row)
    return tuple(out)


def inv_reading_word(phi: ExtendedFilling) -> tuple[int, ...]:
    """Diagram part as in reading_word, then basement labels read down
    column 1, then column 2, and so on."""
    out = []
    for j, row in _rows_top_to_bottom(phi):
        if j >= 1:
            out.extend(lab for _, lab in row)
    for h, col in zip(phi.shape, phi.columns):
        out.extend(col[h:])
    return tuple(out)


def _diagram_cells_reading_order(phi: ExtendedFilling):
    for j, row in _rows_top_to_bottom(phi):
        if j >= 1:
            for i, lab in row:
                yield i, j, lab


def _inv_pairs(phi: ExtendedFilling):
    """Inversion pairs of all three kinds.  Yields (kind, first, second)
    where first/second are (column, row) cells; for the column-count kind
    the pair is yielded once per column strictly left of the basement
    cell, with first = None."""
    dia = list(_diagram_cells_reading_order(phi))
    # kind 1: attacking pairs inside the diagram, earlier label larger
    for a in range(len(dia)):
        i1, j1, l1 = dia[a]
        for b in range(a + 1, len(dia)):
            i2, j2, l2 = dia[b]
            attacking = (j1 == j2 and i1 < i2) or (j1 == j2 + 1 and i1 > i2)
            if attacking and l1 > l2:
                yield 1, (i1, j1), (i2, j2)
    basement = [
        (i, j, lab) for i, j, lab in phi.cells() if j <= 0
    ]
    # kind 2: bottom diagram cell beats a basement cell strictly to its left
    for i in range(1, phi.s + 1):
        if phi.shape[i - 1] >= 1 and phi.has_cell(i, 1):
            l1 = phi.label(i, 1)
            for i2, j2, l2 in basement:
                if i2 < i and l1 > l2:
                    yield 2, (i, 1), (i2, j2)
    # kind 3: each basement cell in column c pairs with every column < c
    for i2, j2, _ in basement:
        for _ in range(i2 - 1):
            yield 3, None, (i2, j2)


def inv(phi: ExtendedFilling) -> int:
    """The basement-aware inversion statistic (independent of s)."""
    return sum(1 for _ in _inv_pairs(phi))


def _dinv_pairs(phi: ExtendedFilling, s: int | None = None):
    """Diagonal inversion pairs over the full s-column grid.  Yields
    (kind, first, second) with kind 1 = both cells present and the earlier
    label larger, kind 2 = absent coordinate attacking a present basement
    cell (both rows <= 0)."""
    if s is None:
        s = phi.s
    if s < phi.s:
        raise ValueError("s smaller than the number of columns")
    shape = phi.shape + (0,) * (s - phi.s)
    present = {(i, j): lab for i, j, lab in phi.cells()}
    if phi.n == 0:
        return
    top = max(shape)
    bottom = min(h - len(col) + 1 for h, col in zip(phi.shape, phi.columns))
    bottom = min(bottom, 1)

    def valid(i, j):
        return j <= shape[i - 1]

    for j in range(top, bottom - 1, -1):
        for i1 in range(1, s + 1):
            if not valid(i1, j):
                continue
            # same row, first cell strictly left
            for i2 in range(i1 + 1, s + 1):
                if valid(i2, j):
                    yield from _classify_dpair(present, (i1, j), (i2, j))
            # next row down, first cell strictly right
            for i2 in range(1, i1):
                if valid(i2, j - 1):
                    yield from _classify_dpair(present, (i1, j), (i2, j - 1))


def _classify_dpair(present, c1, c2):
    p1, p2 = c1 in present, c2 in present
    if p1 and p2:
        if present[c1] > present[c2]:
            yield 1, c1, c2
    elif not p1 and p2 and c1[1] <= 0 and c2[1] <= 0:
        yield 2, c1, c2


def dinv(phi: ExtendedFilling, s: int | None = None) -> int:
    """The diagonal inversion statistic; depends on s because absent
    columns still attack present basement cells."""
    return sum(1 for _ in _dinv_pairs(phi, s))


# --- codes ----------------------------------------------------------------


def _cell_positions(phi: ExtendedFilling, order: str) -> dict[tuple[int, int], int]:
    """Position of each cell in reading order ('rw') or inversion reading
    order ('irw')."""
    pos = {}
    idx = 0
    if order == "rw":
        for j, row in _rows_top_to_bottom(phi):
            for i, _ in row:
                pos[(i, j)] = idx
                idx += 1
    elif order == "irw":
        for j, row in _rows_top_to_bottom(phi):
            if j >= 1:
                for i, _ in row:
                    pos[(i, j)] = idx
                    idx += 1
        for i, (h, col) in enumerate(zip(phi.shape, phi.columns), start=1):
            for t in range(h, len(col)):
                pos[(i, h - t)] = idx
                idx += 1
    else:
        raise ValueError(order)
    return pos


def _code(phi, pairs, order: str) -> Composition:
    """Per-cell inversion counts (c_n, ..., c_1): cells ranked by label
    with ties broken by the given scanning order; c_p counts the pairs
    whose second element is the p-th cell."""
    pos = _cell_positions(phi, order)
    cells = sorted(phi.cells(), key=lambda c: (c[2], pos[(c[0], c[1])]))
    rank = {(i, j): p for p, (i, j, _) in enumerate(cells)}
    counts = [0] * len(cells)
    for _, _, second in pairs:
        counts[rank[second]] += 1
    return tuple(reversed(counts))


def invcode(phi: ExtendedFilling) -> Composition:
    """Inversion code (c_n, ..., c_1); entries sum to inv(phi)."""
    return _code(phi, _inv_pairs(phi), "irw")


def dinvcode(phi: ExtendedFilling, s: int | None = None) -> Composition:
    """Diagonal inversion code (c_n, ..., c_1); entries sum to dinv(phi, s)."""
    return _code(phi, _dinv_pairs(phi, s), "rw")


# --- insertion ------------------------------------------------------------


def is_weakly_decreasing_by(code_left_to_right, gamma) -> bool:
    """True iff each block of consecutive entries, with block sizes given
    by gamma, is weakly decreasing."""
    pos = 0
    for g in gamma:
        block = code_left_to_right[pos:pos + g]
        if any(block[t] < block[t + 1] for t in range(len(block) - 1)):
            return False
        pos += g
    return pos == len(code_left_to_right)


def word_of_content(gamma) -> list[int]:
    """The weakly increasing word with gamma_i copies of i."""
    out = []
    for i, g in enumerate(gamma, start=1):
        out.extend([i] * g)
    return out


def _validate_code(code, alpha, s, gamma):
    from .shapes import in_staircase_set

    code = tuple(code)
    gamma = tuple(gamma)
    n = len(code)
    if sum(gamma) != n:
        raise ValueError("content does not sum to the code length")
    la = sort_to_partition(alpha)
    if not in_staircase_set(code, n, la, s):
        raise ValueError("code is not a member of the staircase set")
    if not is_weakly_decreasing_by(code, tuple(reversed(gamma))):
        raise ValueError("code is not weakly decreasing against the content")
    return code, gamma


def _pad_shape(alpha, s: int) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if len(alpha) > s:
        raise ValueError("more columns than s")
    return alpha + (0,) * (s - len(alpha))


class _PartialFilling:
    """Mutable build state shared by the two insertion procedures."""

    def __init__(self, alpha, s):
        alpha = _pad_shape(alpha, s)
        self.shape = alpha
        self.s = s
        self.filled = [0] * s          # diagram cells filled, top down
        self.basement = [[] for _ in range(s)]
        self.diagram_cols = [[] for _ in range(s)]

    def place(self, i, label):
        if self.filled[i] < self.shape[i]:
            # highest unfilled diagram cell: columns fill top down
            self.filled[i] += 1
            self.diagram_cols[i].append(label)
        else:
            self.basement[i].append(label)

    def finish(self) -> ExtendedFilling:
        cols = tuple(
            tuple(self.diagram_cols[i]) + tuple(self.basement[i])
            for i in range(self.s)
        )
        return ExtendedFilling(self.shape, cols)


def _label_columns_inv(state: _PartialFilling) -> list[int]:
    """Assign the labels 0..s-1 to columns: first the columns with an
    unfilled diagram cell, ordered by their first unfilled cell in diagram
    reading order; then the remaining columns left to right."""
    order = []
    top = max(state.shape, default=0)
    for j in range(top, 0, -1):
        for i in range(state.s):
            if state.shape[i] < j:
                continue
            t = state.shape[i] - j  # index from the top of the column
            if t >= state.filled[i] and i not in order:
                order.append(i)
    for i in range(state.s):
        if i not in order:
            order.append(i)
    labels = [0] * state.s
    for lab, i in enumerate(order):
        labels[i] = lab
    return labels


def _label_columns_dinv(state: _PartialFilling) -> list[int]:
    """Assign 0..s-1 by scanning all grid coordinates (column a, row
    b <= alpha_a), left to right per row from the top, labeling a column
    when an unfilled coordinate in it is first reached."""
    order = []
    top = max(state.shape, default=0)
    j = top
    while len(order) < state.s:
        for i in range(state.s):
            if i in order or j > state.shape[i]:
                continue
            if j >= 1:
                t = state.shape[i] - j
                unfilled = t >= state.filled[i]
            else:
                unfilled = j <= -len(state.basement[i])
            if unfilled:
                order.append(i)
        j -= 1
    labels = [0] * state.s
    for lab, i in enumerate(order):
        labels[i] = lab
    return labels


def _insert(code, alpha, s, gamma, labeler) -> ExtendedFilling:
    code, gamma = _validate_code(code, alpha, s, gamma)
    state = _PartialFilling(alpha, s)
    word = word_of_content(gamma)
    for c, a in zip(reversed(code), word):
        labels = labeler(state)
        state.place(labels.index(c), a)
    return state.finish()


def insert_inv(code, alpha, s, gamma) -> ExtendedFilling:
    """The insertion inverse of invcode: given a staircase-set member
    (c_n, ..., c_1) that is weakly decreasing against the reversed content,
    build the unique filling of shape alpha with that inversion code."""
    return _insert(code, alpha, s, gamma, _label_columns_inv)


def insert_dinv(code, alpha, s, gamma) -> ExtendedFilling:
    """The insertion inverse of dinvcode (column labels assigned by the
    full-grid scan, basement rows included)."""
    return _insert(code, alpha, s, gamma, _label_columns_dinv)


# --- enumeration ----------------------------------------------------------


def enumerate_seci(n: int, alpha, s: int) -> list[ExtendedFilling]:
    """All standard fillings (labels exactly 1..n) of the diagram with
    column heights alpha inside s columns."""
    alpha = _pad_shape(alpha, s)
    if sum(alpha) > n:
        raise ValueError("not enough labels for the diagram")
    out = []
    for assignment in product(range(s), repeat=n):
        cols = [[] for _ in range(s)]
        for element in range(1, n + 1):
            cols[assignment[element - 1]].append(element)
        if all(len(c) >= h for c, h in zip(cols, alpha)):
            out.append(ExtendedFilling(alpha, tuple(tuple(c) for c in cols)))
    return out


def enumerate_eci_bounded(n: int, alpha, s: int, max_label: int) -> list[ExtendedFilling]:
    """All column-increasing fillings with n cells and labels from
    1..max_label, repetitions allowed."""
    alpha = _pad_shape(alpha, s)
    if max_label < 1:
        raise ValueError("max_label must be positive")

    def size_splits(remaining, cols):
        if cols == 1:
            if remaining >= alpha[s - 1]:
                yield (remaining,)
            return
        i = s - cols
        for m in range(alpha[i], remaining + 1):
            for rest in size_splits(remaining - m, cols - 1):
                yield (m,) + rest

    out = []
    if sum(alpha) > n:
        return out
    for sizes in size_splits(n, s):
        pools = [
            list(combinations_with_replacement(range(1, max_label + 1), m))
            for m in sizes
        ]
        for cols in product(*pools):
            out.append(ExtendedFilling(alpha, cols))
    return out


def ides(word) -> frozenset[int]:
    """Descent set of the inverse permutation: the i with i+1 appearing
    before i in the word."""
    pos = {lab: t for t, lab in enumerate(word)}
    return frozenset(
        i for i in range(1, len(word)) if pos[i + 1] < pos[i]
    )
