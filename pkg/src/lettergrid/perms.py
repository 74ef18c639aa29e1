"""Permutations in one-line notation: patterns, sums, inversion graphs."""

from itertools import combinations

from .errors import InputError
from .graphs import Graph


class Permutation:
    """A permutation of 1..n stored as its one-line value sequence."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise InputError(f"not a permutation of 1..{len(vals)}: {vals}")
        self.values = vals

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        """1-based: pi[i] = pi(i)."""
        return self.values[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Permutation({''.join(map(str, self.values)) if len(self) < 10 else self.values})"

    def inverse(self):
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values, 1):
            inv[v - 1] = i
        return Permutation(inv)


def parse_permutation(text):
    parts = text.split()
    if not all(p.lstrip("-").isdigit() for p in parts):
        raise InputError(f"bad permutation tokens: {text!r}")
    if len(parts) == 1 and len(parts[0]) > 1:
        # compact one-line form like 614253 (single-digit values only)
        return Permutation(int(ch) for ch in parts[0])
    return Permutation(int(p) for p in parts)


def format_permutation(pi):
    return " ".join(str(v) for v in pi.values)


def order_isomorphic(w1, w2):
    """True iff equal lengths and all pairwise comparisons agree."""
    w1, w2 = list(w1), list(w2)
    if len(w1) != len(w2):
        return False
    for (a, b), (c, d) in zip(combinations(w1, 2), combinations(w2, 2)):
        if (a < b) != (c < d) or (a > b) != (c > d):
            return False
    return True


def contains_pattern(pi, sigma):
    """Lexicographically least increasing index sequence (1-based) whose
    values are order-isomorphic to sigma, or None."""
    n, k = len(pi), len(sigma)
    if k == 0:
        return ()
    if k > n:
        return None
    vals = pi.values
    sig = sigma.values

    def extend(prefix, start):
        if len(prefix) == k:
            return prefix
        for i in range(start, n - (k - len(prefix)) + 1):
            cand = prefix + (i,)
            # prefix pruning: comparisons must already agree with sigma
            ok = True
            for a, b in combinations(range(len(cand)), 2):
                if (vals[cand[a]] < vals[cand[b]]) != (sig[a] < sig[b]):
                    ok = False
                    break
            if not ok:
                continue
            found = extend(cand, i + 1)
            if found is not None:
                return found
        return None

    hit = extend((), 0)
    return None if hit is None else tuple(i + 1 for i in hit)


def perm_sum(pi, sigma, mode="direct"):
    """Direct sum: pi then sigma shifted up; skew: pi shifted up then sigma."""
    if mode == "direct":
        vals = list(pi.values) + [v + len(pi) for v in sigma.values]
    elif mode == "skew":
        vals = [v + len(sigma) for v in pi.values] + list(sigma.values)
    else:
        raise InputError(f"unknown sum mode {mode!r}")
    return Permutation(vals)


def inversion_graph(pi):
    """Graph on 1..n with edge {i,j} iff (i-j)(pi(i)-pi(j)) < 0."""
    n = len(pi)
    edges = [
        (i, j)
        for i, j in combinations(range(1, n + 1), 2)
        if pi[i] > pi[j]
    ]
    return Graph(n, edges)


def inversions(pi):
    return len(inversion_graph(pi).edges)


def reverse_complement(pi):
    n = len(pi)
    return Permutation([n + 1 - v for v in reversed(pi.values)])


def pi_n(n):
    """Concatenation w_1..w_n where w_i lists {x <= n^2 : x = i mod n}
    in decreasing order.  pi_n(2) = 3142."""
    if n < 1:
        raise InputError("need n >= 1")
    vals = []
    for i in range(1, n + 1):
        vals.extend(sorted((x for x in range(1, n * n + 1) if x % n == i % n), reverse=True))
    return Permutation(vals)
