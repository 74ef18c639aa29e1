"""0/±1 grid matrices, cell graphs, PMMs, monotone and geometric gridding.

Matrix indexing: entry (i, j) is column i counted left to right, row j
counted bottom to top, so the matrix is read like the plane.  The text
format lists rows top to bottom as conventionally printed, converted on
the way in.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from .errors import Budget, InputError
from .graphs import Graph
from .letters import Decoder
from .perms import Permutation, contains_pattern


class GridMatrix:
    """s columns, t rows, entries in {-1, 0, +1}."""

    __slots__ = ("s", "t", "entries")

    def __init__(self, s, t, entries):
        if s < 1 or t < 1:
            raise InputError("matrix needs at least one column and one row")
        self.s = s
        self.t = t
        ent = {}
        for i in range(1, s + 1):
            for j in range(1, t + 1):
                v = entries.get((i, j), 0) if isinstance(entries, dict) else entries[(i, j)]
                if v not in (-1, 0, 1):
                    raise InputError(f"entry ({i},{j}) = {v} not in -1/0/1")
                ent[(i, j)] = v
        self.entries = ent

    def __getitem__(self, key):
        return self.entries[key]

    def nonzero_cells(self):
        """Non-zero positions sorted by column then row."""
        return sorted(k for k, v in self.entries.items() if v != 0)

    def __eq__(self, other):
        return (
            isinstance(other, GridMatrix)
            and (self.s, self.t) == (other.s, other.t)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"GridMatrix({self.s}x{self.t})"


@dataclass(frozen=True)
class SignVector:
    column_signs: tuple
    row_signs: tuple


@dataclass(frozen=True)
class Gridding:
    """Interior cut positions plus the point -> cell assignment."""

    vcuts: tuple
    hcuts: tuple
    assignment: dict


def cell_letter(m, i, j):
    if m.s > 9 or m.t > 9:
        return f"a{i}_{j}"
    return f"a{i}{j}"


def parse_cell_letter(m, token):
    if not token.startswith("a"):
        raise InputError(f"bad cell letter {token!r}")
    body = token[1:]
    if "_" in body:
        parts = body.split("_")
        if len(parts) != 2:
            raise InputError(f"bad cell letter {token!r}")
        i, j = parts
    elif len(body) == 2:
        i, j = body[0], body[1]
    else:
        raise InputError(f"bad cell letter {token!r}")
    try:
        cell = (int(i), int(j))
    except ValueError as exc:
        raise InputError(f"bad cell letter {token!r}") from exc
    if cell not in m.entries or m.entries[cell] == 0:
        raise InputError(f"letter {token!r} does not name a non-zero entry")
    return cell


def cell_graph(m):
    """Graph on the non-zero entries; adjacent when sharing a row or
    column with only zeros between."""
    cells = m.nonzero_cells()
    index = {c: v + 1 for v, c in enumerate(cells)}
    edges = []
    for (i1, j1), (i2, j2) in combinations(cells, 2):
        if i1 == i2:
            lo, hi = sorted((j1, j2))
            if all(m[(i1, j)] == 0 for j in range(lo + 1, hi)):
                edges.append((index[(i1, j1)], index[(i2, j2)]))
        elif j1 == j2:
            lo, hi = sorted((i1, i2))
            if all(m[(i, j1)] == 0 for i in range(lo + 1, hi)):
                edges.append((index[(i1, j1)], index[(i2, j2)]))
    return Graph(len(cells), edges)


def find_pmm_signs(m):
    """Column/row signs with every non-zero entry = c_i * r_j, or None.

    Propagates from a +1 seed on the first unassigned node of each
    connected component of the column/row constraint graph.
    """
    nodes = [("c", i) for i in range(1, m.s + 1)] + [("r", j) for j in range(1, m.t + 1)]
    sign = {}
    for seed in nodes:
        if seed in sign:
            continue
        sign[seed] = 1
        stack = [seed]
        while stack:
            kind, idx = stack.pop()
            if kind == "c":
                partners = [(("r", j), m[(idx, j)]) for j in range(1, m.t + 1)]
            else:
                partners = [(("c", i), m[(i, idx)]) for i in range(1, m.s + 1)]
            for other, entry in partners:
                if entry == 0:
                    continue
                want = entry * sign[(kind, idx)]
                if other in sign:
                    if sign[other] != want:
                        return None
                else:
                    sign[other] = want
                    stack.append(other)
    return SignVector(
        tuple(sign[("c", i)] for i in range(1, m.s + 1)),
        tuple(sign[("r", j)] for j in range(1, m.t + 1)),
    )


def refine(m, k):
    """Replace every entry by a k x k block: identity diagonal for +1,
    antidiagonal of -1 for -1, zero block for 0."""
    if k < 1:
        raise InputError("need k >= 1")
    entries = {}
    for (i, j), v in m.entries.items():
        for a in range(1, k + 1):
            for b in range(1, k + 1):
                col = (i - 1) * k + a
                row = (j - 1) * k + b
                if v == 1 and a == b:
                    entries[(col, row)] = 1
                elif v == -1 and b == k + 1 - a:
                    entries[(col, row)] = -1
                else:
                    entries[(col, row)] = 0
    return GridMatrix(m.s * k, m.t * k, entries)


def check_monotone_gridding(pi, m, vcuts, hcuts):
    """Validate specific cut positions; the Gridding or None."""
    if len(vcuts) != m.s - 1 or len(hcuts) != m.t - 1:
        raise InputError("cut counts must be s-1 and t-1")
    assignment = {}
    cells = {}
    for i in range(1, len(pi) + 1):
        col = 1 + sum(1 for c in vcuts if c < i)
        row = 1 + sum(1 for c in hcuts if c < pi[i])
        assignment[i] = (col, row)
        cells.setdefault((col, row), []).append(pi[i])
    for cell, values in cells.items():
        entry = m[cell]
        if entry == 0:
            return None
        if entry == 1 and values != sorted(values):
            return None
        if entry == -1 and values != sorted(values, reverse=True):
            return None
    return Gridding(tuple(vcuts), tuple(hcuts), assignment)


def monotone_gridding(pi, m):
    """First gridding (lexicographic cut order) placing pi's points into
    cells that are empty/increasing/decreasing per the matrix entries."""
    n = len(pi)
    slots = [i + Fraction(1, 2) for i in range(n + 1)]
    for vcuts in combinations_with_replacement(slots, m.s - 1):
        for hcuts in combinations_with_replacement(slots, m.t - 1):
            found = check_monotone_gridding(pi, m, vcuts, hcuts)
            if found is not None:
                return found
    return None


def phi(m, signs, w):
    """Decode a cell word to a permutation by diagonal point placement.

    Letter a_kl at position i puts a point at infinity-norm distance
    d_i = i/(|w|+1) from the cell corner picked by the signs; the
    permutation reads the points off by x.  Exact rationals throughout.
    """
    _require_pmm(m, signs)
    cells = [parse_cell_letter(m, tok) if isinstance(tok, str) else tok for tok in w]
    n = len(cells)
    points = []
    for i, (k, l) in enumerate(cells, 1):
        d = Fraction(i, n + 1)
        x = (k - 1) + (d if signs.column_signs[k - 1] == 1 else 1 - d)
        y = (l - 1) + (d if signs.row_signs[l - 1] == 1 else 1 - d)
        points.append((x, y))
    points.sort()
    ys = sorted(y for _, y in points)
    rank = {y: r for r, y in enumerate(ys, 1)}
    return Permutation([rank[y] for _, y in points])


def _require_pmm(m, signs):
    if len(signs.column_signs) != m.s or len(signs.row_signs) != m.t:
        raise InputError("sign vector shape mismatch")
    for (i, j), v in m.entries.items():
        if v != 0 and v != signs.column_signs[i - 1] * signs.row_signs[j - 1]:
            raise InputError("matrix is not a PMM under the given signs")


def decoder_from_pmm(m, signs):
    """Decoder on the cell alphabet with decode(D, w) isomorphic to the
    inversion graph of phi(m, signs, w) for every cell word w.

    Whether a later point inverts an earlier one depends only on the two
    cells and the signs, which is what makes a decoder possible.
    """
    _require_pmm(m, signs)
    cells = m.nonzero_cells()
    letters = [cell_letter(m, i, j) for i, j in cells]
    arcs = []
    for (k1, l1), a1 in zip(cells, letters):
        for (k2, l2), a2 in zip(cells, letters):
            xsign = signs.column_signs[k1 - 1] if k1 == k2 else (1 if k2 > k1 else -1)
            ysign = signs.row_signs[l1 - 1] if l1 == l2 else (1 if l2 > l1 else -1)
            if xsign * ysign < 0:
                arcs.append((a1, a2))
    return Decoder(letters, arcs)


def geometric_gridding(pi, m, budget=None):
    """Lexicographically least cell word w of length |pi| with
    phi(w) = pi, or None.  Non-PMM matrices are refined by x2 first
    (class-preserving), so the word is then over the refined alphabet."""
    budget = budget or Budget()
    signs = find_pmm_signs(m)
    if signs is None:
        m = refine(m, 2)
        signs = find_pmm_signs(m)
        assert signs is not None, "a x2 refinement is always a PMM"
    n = len(pi)
    letters = sorted(
        (cell_letter(m, i, j) for i, j in m.nonzero_cells()),
    )
    cells = {tok: parse_cell_letter(m, tok) for tok in letters}
    if n == 0:
        return ()

    def pattern_of(points):
        pts = sorted(points)
        ys = sorted(y for _, y in pts)
        rank = {y: r for r, y in enumerate(ys, 1)}
        return Permutation([rank[y] for _, y in pts])

    prefix_points = []

    def rec(i):
        if i > n:
            return phi(m, signs, tuple(word)) == pi
        for tok in letters:
            budget.tick("geometric gridding search")
            k, l = cells[tok]
            d = Fraction(i, n + 1)
            x = (k - 1) + (d if signs.column_signs[k - 1] == 1 else 1 - d)
            y = (l - 1) + (d if signs.row_signs[l - 1] == 1 else 1 - d)
            prefix_points.append((x, y))
            word.append(tok)
            # the placed points' pattern is final; it must occur in pi
            if contains_pattern(pi, pattern_of(prefix_points)) is not None and rec(i + 1):
                return True
            word.pop()
            prefix_points.pop()
        return False

    word = []
    if rec(1):
        return tuple(word)
    return None


def enumerate_class(m, n, mode, budget=None):
    """All permutations of S_n monotonically (grid) or geometrically
    (geom) griddable by m, in lexicographic order."""
    if mode not in ("grid", "geom"):
        raise InputError(f"unknown mode {mode!r}")
    if n > 7:
        raise InputError("enumeration supported for n <= 7")
    out = []
    for vals in permutations(range(1, n + 1)):
        pi = Permutation(vals)
        if mode == "grid":
            hit = monotone_gridding(pi, m) is not None
        else:
            hit = geometric_gridding(pi, m, budget) is not None
        if hit:
            out.append(pi)
    return out


# --- text formats ---------------------------------------------------------

def parse_matrix(text):
    """Parse `matrix <s> <t>` plus t printed rows (top to bottom)."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("matrix"):
        raise InputError("missing `matrix <s> <t>` header")
    parts = lines[0].split()
    if len(parts) != 3:
        raise InputError("expected `matrix <s> <t>`")
    try:
        s, t = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise InputError("bad matrix dimensions") from exc
    if len(lines) - 1 != t:
        raise InputError(f"expected {t} rows, got {len(lines) - 1}")
    entries = {}
    for printed_row, line in enumerate(lines[1:]):
        row = t - printed_row  # printed top to bottom, stored bottom to top
        vals = line.split()
        if len(vals) != s:
            raise InputError(f"row {printed_row + 1}: expected {s} entries")
        for col, v in enumerate(vals, 1):
            if v not in ("-1", "0", "1", "+1"):
                raise InputError(f"bad entry {v!r}")
            entries[(col, row)] = int(v)
    return GridMatrix(s, t, entries)


def format_matrix(m):
    lines = [f"matrix {m.s} {m.t}"]
    for row in range(m.t, 0, -1):
        lines.append(" ".join(str(m[(col, row)]) for col in range(1, m.s + 1)))
    return "\n".join(lines) + "\n"
