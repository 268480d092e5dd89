"""Data model for orthogonal arrays and block designs.

Symbols are integers 0..n-1; the designated symbol used by normalization and
the counting arguments is 0.  Arrays are equal up to row order for
multiplicity purposes: rows are stored in the order given, and the census
operations treat them as a multiset.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .errors import FormatError, NotADesign, NotAnOA, NonintegralIndex

__all__ = [
    "OrthogonalArray",
    "BlockDesign",
    "MultiplicityReport",
    "strength_lambda",
    "row_multiplicities",
    "block_multiplicities",
    "normalize_to_row",
    "symbol_counts",
    "stack",
    "verify_bibd",
    "parse_oa",
    "format_oa",
    "parse_bibd",
    "format_bibd",
]


@dataclass(frozen=True)
class OrthogonalArray:
    """An N x k array over the alphabet {0, ..., n-1}."""

    n: int
    k: int
    rows: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("alphabet size n must be at least 2")
        if self.k < 2:
            raise ValueError("column count k must be at least 2")
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("array must have at least one row")
        for i, row in enumerate(rows):
            if len(row) != self.k:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.k}")
            for e in row:
                if not isinstance(e, int) or not 0 <= e < self.n:
                    raise ValueError(f"row {i}: entry {e!r} outside 0..{self.n - 1}")

    @property
    def N(self):
        return len(self.rows)


@dataclass(frozen=True)
class BlockDesign:
    """A multiset of k-element blocks over points {0, ..., v-1}."""

    v: int
    k: int
    blocks: tuple

    def __post_init__(self):
        if not 2 <= self.k <= self.v:
            raise ValueError("need 2 <= k <= v")
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for i, block in enumerate(blocks):
            if len(block) != self.k or len(set(block)) != self.k:
                raise ValueError(f"block {i} is not a {self.k}-element set")
            if block[0] < 0 or block[-1] >= self.v:
                raise ValueError(f"block {i} has a point outside 0..{self.v - 1}")

    @property
    def b(self):
        return len(self.blocks)


@dataclass(frozen=True)
class MultiplicityReport:
    """Census of a row (or block) multiset.

    `counts` maps each distinct item to its multiplicity in first-occurrence
    order; `witness_index` is the index of the first item achieving the
    maximum.
    """

    counts: dict
    max_multiplicity: int
    witness_index: int

    def __post_init__(self):
        assert self.max_multiplicity == max(self.counts.values())


def strength_lambda(array, t=2):
    """Index of `array` as a strength-t orthogonal array.

    Returns the integer lambda = N / n**t after checking that within every
    t-subset of columns every ordered t-tuple occurs exactly lambda times.
    Raises NonintegralIndex when n**t does not divide N, and NotAnOA with the
    offending column subset and tuple otherwise.
    """
    if not 2 <= t <= array.k:
        raise ValueError("need 2 <= t <= k")
    denom = array.n ** t
    if array.N % denom:
        raise NonintegralIndex(array.N, array.n, t)
    lam = array.N // denom
    for cols in combinations(range(array.k), t):
        freq = Counter(tuple(row[c] for c in cols) for row in array.rows)
        for tup in product(range(array.n), repeat=t):
            if freq[tup] != lam:
                raise NotAnOA(cols, tup, freq[tup], lam)
    return lam


def _census(items):
    counts = {}
    for item in items:
        counts[item] = counts.get(item, 0) + 1
    best = max(counts.values())
    witness = next(i for i, item in enumerate(items) if counts[item] == best)
    return MultiplicityReport(counts, best, witness)


def row_multiplicities(array):
    """Exact multiset census of the rows."""
    return _census(array.rows)


def block_multiplicities(design):
    """Exact multiset census of the blocks."""
    return _census(design.blocks)


def normalize_to_row(array, index):
    """Relabel symbols per column so row `index` becomes all-zeros.

    Each column applies the transposition swapping the target row's symbol
    with 0 (identity when it is already 0), which preserves all tuple
    frequencies.  All copies of the target row are then moved to the end of
    the row order; the order of the other rows is preserved.
    """
    if not 0 <= index < array.N:
        raise ValueError(f"row index {index} out of range")
    target = array.rows[index]

    def relabel(e, j):
        if e == target[j]:
            return 0
        if e == 0:
            return target[j]
        return e

    rows = [tuple(relabel(e, j) for j, e in enumerate(row)) for row in array.rows]
    zero = tuple([0] * array.k)
    kept = [r for r in rows if r != zero]
    moved = [r for r in rows if r == zero]
    return OrthogonalArray(array.n, array.k, tuple(kept + moved))


def symbol_counts(array, exclude_last):
    """Per-row counts of the designated symbol 0, excluding the last rows.

    Requires the last `exclude_last` rows to be all-zeros (the normalized
    repeated row); returns the counts a_i for the remaining rows in order.
    """
    m = exclude_last
    if not 0 <= m <= array.N:
        raise ValueError("exclude_last out of range")
    zero = tuple([0] * array.k)
    for i in range(array.N - m, array.N):
        if array.rows[i] != zero:
            raise ValueError(f"row {i} is not all-zeros; normalize first")
    return tuple(row.count(0) for row in array.rows[: array.N - m])


def stack(array, copies):
    """Vertical concatenation of `copies` copies of the array.

    Multiplies the index and every row multiplicity by `copies`.
    """
    if copies < 1:
        raise ValueError("need at least one copy")
    return OrthogonalArray(array.n, array.k, array.rows * copies)


def verify_bibd(design, t=2):
    """Index of `design` as a t-design.

    Returns lambda if every t-subset of points lies in exactly lambda
    blocks; raises NotADesign with the first offending subset otherwise.
    """
    if not 1 <= t <= design.k:
        raise ValueError("need 1 <= t <= k")
    cover = Counter()
    for block in design.blocks:
        for sub in combinations(block, t):
            cover[sub] += 1
    lam = None
    for sub in combinations(range(design.v), t):
        if lam is None:
            lam = cover[sub]
        if cover[sub] != lam:
            raise NotADesign(sub, cover[sub], lam)
    return lam


# ---------------------------------------------------------------------------
# Text formats.
#
# OA:   line 1 `n k`; each further non-empty line k space-separated symbols
#       in 0..n-1.  BIBD: line 1 `v k`; each line k point indices.  Lines
#       whose first non-blank character is `#` are comments.
# ---------------------------------------------------------------------------


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_header(line, lineno, names):
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"line {lineno}: expected `{names}` header")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer header") from None


def parse_oa(text):
    """Parse the OA text format into an OrthogonalArray."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty input") from None
    n, k = _parse_header(header, lineno, "n k")
    rows = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != k:
            raise FormatError(f"line {lineno}: expected {k} symbols, got {len(parts)}")
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer symbol") from None
        for e in row:
            if not 0 <= e < n:
                raise FormatError(f"line {lineno}: symbol {e} outside 0..{n - 1}")
        rows.append(row)
    if not rows:
        raise FormatError("no rows")
    try:
        return OrthogonalArray(n, k, tuple(rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_oa(array, comments=()):
    """Render an OrthogonalArray in the OA text format."""
    out = [f"# {c}" for c in comments]
    out.append(f"{array.n} {array.k}")
    out.extend(" ".join(str(e) for e in row) for row in array.rows)
    return "\n".join(out) + "\n"


def parse_bibd(text):
    """Parse the BIBD text format into a BlockDesign."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty input") from None
    v, k = _parse_header(header, lineno, "v k")
    blocks = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != k:
            raise FormatError(f"line {lineno}: expected {k} points, got {len(parts)}")
        try:
            block = tuple(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer point") from None
        for p in block:
            if not 0 <= p < v:
                raise FormatError(f"line {lineno}: point {p} outside 0..{v - 1}")
        if len(set(block)) != k:
            raise FormatError(f"line {lineno}: repeated point in block")
        blocks.append(block)
    if not blocks:
        raise FormatError("no blocks")
    try:
        return BlockDesign(v, k, tuple(blocks))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_bibd(design, comments=()):
    """Render a BlockDesign in the BIBD text format."""
    out = [f"# {c}" for c in comments]
    out.append(f"{design.v} {design.k}")
    out.extend(" ".join(str(p) for p in block) for block in design.blocks)
    return "\n".join(out) + "\n"
