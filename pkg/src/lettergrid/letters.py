"""Decoders, words, the decoding map, and exact lettericity.

A decoder is a digraph on an alphabet; a word over it decodes to the
graph whose edges are the letter pairs that are arcs, read in position
order.  Lettericity is the least alphabet size representing a graph;
the solver backtracks over (vertex, letter) placements and infers the
decoder arcs lazily as tri-state constraints.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import Budget, BudgetExhausted, InputError
from .graphs import Graph, all_graphs, induced_subgraph


class Decoder:
    """Alphabet plus arc set; loops allowed."""

    __slots__ = ("letters", "arcs")

    def __init__(self, letters, arcs):
        self.letters = tuple(letters)
        if len(set(self.letters)) != len(self.letters):
            raise InputError("duplicate letters in decoder")
        arcset = set()
        for a, b in arcs:
            if a not in self.letters or b not in self.letters:
                raise InputError(f"arc ({a},{b}) uses unknown letter")
            arcset.add((a, b))
        self.arcs = frozenset(arcset)

    def __eq__(self, other):
        return (
            isinstance(other, Decoder)
            and self.letters == other.letters
            and self.arcs == other.arcs
        )

    def __repr__(self):
        return f"Decoder({self.letters}, {sorted(self.arcs)})"


@dataclass(frozen=True)
class LetterCertificate:
    """Vertex -> letter assignment plus a total vertex order."""

    assignment: dict
    order: tuple

    def word(self):
        return tuple(self.assignment[v] for v in self.order)


def decode(d, w):
    """Graph on 1..|w| with edge {i,j}, i<j, iff (w_i, w_j) is an arc."""
    for sym in w:
        if sym not in d.letters:
            raise InputError(f"symbol {sym!r} not in decoder alphabet")
    n = len(w)
    edges = [
        (i, j)
        for i, j in combinations(range(1, n + 1), 2)
        if (w[i - 1], w[j - 1]) in d.arcs
    ]
    return Graph(n, edges)


def certificate_from_word(w):
    """Certificate for the decoded graph itself: vertex i is position i."""
    return LetterCertificate({i: sym for i, sym in enumerate(w, 1)}, tuple(range(1, len(w) + 1)))


def verify_certificate(g, c, d):
    """True iff decoding the letters along c.order reproduces g exactly."""
    verts = set(range(1, g.n + 1))
    if set(c.order) != verts or set(c.assignment) != verts:
        raise InputError("certificate does not cover the vertex set exactly")
    decoded = decode(d, c.word())
    pos = {v: i for i, v in enumerate(c.order, 1)}
    edges = {(min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges}
    return decoded.edges == frozenset(edges)


def recognize(d, g, budget=None):
    """Lexicographically least word decoding to a graph isomorphic to g.

    Backtracks over word positions left to right, choosing a letter (in
    alphabet order) and a vertex of g to stand at that position.
    """
    budget = budget or Budget()
    n = g.n
    placed = []  # (vertex, letter)
    used = [False] * (n + 1)

    def rec():
        if len(placed) == n:
            return True
        for letter in d.letters:
            for v in range(1, n + 1):
                if used[v]:
                    continue
                budget.tick("fixed-decoder recognition")
                ok = True
                for u, lu in placed:
                    if g.has_edge(u, v) != ((lu, letter) in d.arcs):
                        ok = False
                        break
                if not ok:
                    continue
                placed.append((v, letter))
                used[v] = True
                if rec():
                    return True
                used[v] = False
                placed.pop()
        return False

    if rec():
        return tuple(letter for _, letter in placed)
    return None


def cochromatic_number(g, budget=None):
    """Least number of bags in a partition into cliques and independent sets."""
    budget = budget or Budget()
    n = g.n
    if n == 0:
        return 0

    def assignable(v, bag, kind):
        # kind: True = clique so far, False = independent, None = singleton
        has = [g.has_edge(v, u) for u in bag]
        if kind is None:
            return True
        return all(has) if kind else not any(has)

    def rec(v, bags, kinds, limit):
        if v > n:
            return True
        budget.tick("co-chromatic search")
        for idx, bag in enumerate(bags):
            if assignable(v, bag, kinds[idx]):
                newkind = kinds[idx]
                if newkind is None and bag:
                    newkind = g.has_edge(v, bag[0])
                bag.append(v)
                old = kinds[idx]
                kinds[idx] = newkind
                if rec(v + 1, bags, kinds, limit):
                    return True
                kinds[idx] = old
                bag.pop()
        if len(bags) < limit:
            bags.append([v])
            kinds.append(None)
            if rec(v + 1, bags, kinds, limit):
                return True
            bags.pop()
            kinds.pop()
        return False

    for limit in range(1, n + 1):
        if rec(1, [], [], limit):
            return limit
    return n


def _fit_letters(g, k, budget):
    """A k-letter representation of g, or None.

    Returns (placements, arcs): placements is the word as a list of
    (vertex, letter index), arcs maps determined ordered letter pairs to
    booleans.  Letters are introduced in canonical index order.
    """
    n = g.n
    placed = []
    used = [False] * (n + 1)
    arcs = {}

    def place(v, let):
        added = []
        for u, lu in placed:
            e = g.has_edge(u, v)
            key = (lu, let)
            known = arcs.get(key)
            if known is None:
                arcs[key] = e
                added.append(key)
            elif known != e:
                for kk in added:
                    del arcs[kk]
                return None
        return added

    def rec(next_new):
        if len(placed) == n:
            return True
        for v in range(1, n + 1):
            if used[v]:
                continue
            for let in range(min(next_new + 1, k)):
                budget.tick("lettericity search", best=(None, None))
                added = place(v, let)
                if added is None:
                    continue
                placed.append((v, let))
                used[v] = True
                if rec(max(next_new, let + 1)):
                    return True
                used[v] = False
                placed.pop()
                for kk in added:
                    del arcs[kk]
        return False

    if rec(0):
        return list(placed), dict(arcs)
    return None


def _witness_from_fit(fit):
    placements, arcs = fit
    k = max(let for _, let in placements) + 1 if placements else 0
    names = [f"a{i + 1}" for i in range(k)]
    decoder = Decoder(names, [(names[a], names[b]) for (a, b), e in arcs.items() if e])
    word = tuple(names[let] for _, let in placements)
    cert = LetterCertificate(
        {v: names[let] for v, let in placements},
        tuple(v for v, _ in placements),
    )
    return decoder, word, cert


def lettericity(g, budget=None):
    """Exact lettericity for desk-scale graphs (documented default n <= 10)."""
    return lettericity_witness(g, budget)[0]


def lettericity_witness(g, budget=None):
    """(lett(g), decoder, word, certificate); word positions follow the
    certificate's vertex order."""
    budget = budget or Budget()
    if g.n == 0:
        return 0, Decoder((), ()), (), LetterCertificate({}, ())
    lower = max(1, cochromatic_number(g, budget))
    for k in range(lower, g.n + 1):
        try:
            fit = _fit_letters(g, k, budget)
        except BudgetExhausted as exc:
            raise BudgetExhausted(
                f"lettericity undecided, known interval [{k}, {g.n}]",
                best=(k, g.n),
            ) from exc
        if fit is not None:
            decoder, word, cert = _witness_from_fit(fit)
            return k, decoder, word, cert
    raise AssertionError("n-letter representation must exist")


def fits_letters(g, k, budget=None):
    """True iff g has a representation over at most k letters."""
    if g.n == 0:
        return True
    return _fit_letters(g, k, budget or Budget()) is not None


def subword_leq(w1, w2):
    """Greedy leftmost embedding of w1 into w2 (1-based indices), or None."""
    out = []
    j = 0
    for sym in w1:
        while j < len(w2) and w2[j] != sym:
            j += 1
        if j == len(w2):
            return None
        out.append(j + 1)
        j += 1
    return tuple(out)


def minimal_obstructions(k, n_max, budget=None):
    """Graphs of <= n_max vertices outside L_k whose one-vertex deletions
    all lie in L_k, up to isomorphism."""
    if k < 1:
        raise InputError("need k >= 1")
    if n_max > 7:
        raise InputError("obstruction enumeration supported for n_max <= 7")
    budget = budget or Budget()
    out = []
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            if fits_letters(g, k, budget):
                continue
            verts = set(range(1, n + 1))
            if all(
                fits_letters(induced_subgraph(g, verts - {v}), k, budget)
                for v in verts
            ):
                out.append(g)
    return out


# --- text formats ---------------------------------------------------------

def parse_decoder(text):
    """Parse the `letters ...` / `arc <a> <b>` format."""
    letters = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "letters":
            if letters is not None:
                raise InputError(f"line {lineno}: duplicate letters line")
            letters = parts[1:]
        elif parts[0] == "arc":
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected `arc <a> <b>`")
            arcs.append((parts[1], parts[2]))
        else:
            raise InputError(f"line {lineno}: unknown directive {parts[0]!r}")
    if letters is None:
        raise InputError("missing `letters` line")
    return Decoder(letters, arcs)


def format_decoder(d):
    lines = ["letters " + " ".join(d.letters)]
    lines += [f"arc {a} {b}" for a, b in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def parse_word(text):
    return tuple(text.split())


def format_word(w):
    return " ".join(w)
