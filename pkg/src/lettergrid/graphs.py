"""Finite simple graphs on vertices 1..n and small-order isomorphism.

The graph type here is the substrate for everything else: induced
subgraphs, complements, homogeneous-set and chain-pair tests, the
standard families, and a canonical form good enough for exhaustive
enumeration up to 7 vertices.
"""

from itertools import combinations, permutations, product

from .errors import Budget, InputError

FAMILIES = ("complete", "path", "cycle", "matching", "edgeless")


class Graph:
    """Immutable simple graph on vertices 1..n."""

    __slots__ = ("n", "edges", "adj", "_canon")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        norm = set()
        for i, j in edges:
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge ({i},{j}) out of range 1..{n}")
            norm.add((min(i, j), max(i, j)))
        self.n = n
        self.edges = frozenset(norm)
        adj = [0] * (n + 1)
        for i, j in norm:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.adj = tuple(adj)
        self._canon = None

    def has_edge(self, i, j):
        return bool(self.adj[i] >> j & 1)

    def neighbours(self, v):
        return mask_to_set(self.adj[v])

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def edge_count(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"


def mask_to_set(mask):
    out = set()
    v = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.add(v)
        mask &= mask - 1
    return out


def set_to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def check_vertex_set(g, u):
    for v in u:
        if not (1 <= v <= g.n):
            raise InputError(f"vertex {v} not in 1..{g.n}")


def induced_subgraph(g, u):
    """Subgraph on u, relabelled 1..|u| preserving ascending original labels."""
    check_vertex_set(g, u)
    order = sorted(set(u))
    index = {v: i + 1 for i, v in enumerate(order)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(order), edges)


def complement(g):
    edges = [(i, j) for i, j in combinations(range(1, g.n + 1), 2) if not g.has_edge(i, j)]
    return Graph(g.n, edges)


def is_homogeneous(g, u):
    """True iff u induces a clique or an independent set."""
    check_vertex_set(g, u)
    verts = sorted(set(u))
    seen_edge = seen_nonedge = False
    for a, b in combinations(verts, 2):
        if g.has_edge(a, b):
            seen_edge = True
        else:
            seen_nonedge = True
        if seen_edge and seen_nonedge:
            return False
    return True


def is_chain_pair(g, a, b):
    """True iff the bipartite graph between a and b is 2K2-free.

    Equivalent: the neighbourhoods into the other side are linearly
    ordered by inclusion.
    """
    aset, bset = set(a), set(b)
    if aset & bset:
        raise InputError("chain-pair sides overlap")
    check_vertex_set(g, aset)
    check_vertex_set(g, bset)
    bmask = set_to_mask(bset)
    nbhds = [g.adj[v] & bmask for v in aset]
    for x, y in combinations(nbhds, 2):
        if x | y not in (x, y):
            return False
    return True


def generate(family, n):
    """Standard families; matching n means nK2 on 2n vertices."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    if n < 1:
        raise InputError(f"family size must be >= 1, got {n}")
    if family == "complete":
        return Graph(n, combinations(range(1, n + 1), 2))
    if family == "path":
        return Graph(n, [(i, i + 1) for i in range(1, n)])
    if family == "cycle":
        if n < 3:
            raise InputError(f"cycle needs n >= 3, got {n}")
        return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    if family == "matching":
        return Graph(2 * n, [(2 * i - 1, 2 * i) for i in range(1, n + 1)])
    return Graph(n)


def _refined_colours(g):
    """Iterated neighbour-degree refinement; keys comparable across graphs."""
    colour = {v: (g.degree(v),) for v in range(1, g.n + 1)}
    for _ in range(3):
        new = {
            v: (colour[v], tuple(sorted(colour[u] for u in g.neighbours(v))))
            for v in range(1, g.n + 1)
        }
        if len(set(new.values())) == len(set(colour.values())):
            break
        colour = new
    return colour


def canonical_form(g):
    """Minimum adjacency bitstring over colour-respecting vertex orderings.

    The colour classes come from an isomorphism-invariant refinement, so
    restricting to orderings that list the classes in sorted-key order is
    still canonical while pruning most of the n! orderings.
    """
    if g._canon is not None:
        return g._canon
    colour = _refined_colours(g)
    classes = {}
    for v, c in colour.items():
        classes.setdefault(c, []).append(v)
    grouped = [sorted(vs) for _, vs in sorted(classes.items())]
    pairs = list(combinations(range(g.n), 2))
    best = None
    for parts in product(*(permutations(grp) for grp in grouped)):
        order = [v for part in parts for v in part]
        bits = 0
        for a, b in pairs:
            bits = bits << 1 | (g.adj[order[a]] >> order[b] & 1)
        if best is None or bits < best:
            best = bits
    g._canon = (g.n, best if best is not None else 0)
    return g._canon


def is_isomorphic(g1, g2):
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if sorted(g1.degree(v) for v in range(1, g1.n + 1)) != sorted(
        g2.degree(v) for v in range(1, g2.n + 1)
    ):
        return False
    return canonical_form(g1) == canonical_form(g2)


def contains_induced(host, pattern, budget=None):
    """Lexicographically least vertex set of host inducing pattern, or None."""
    if pattern.n > host.n:
        return None
    budget = budget or Budget()
    target = canonical_form(pattern)
    for combo in combinations(range(1, host.n + 1), pattern.n):
        budget.tick("induced-subgraph search")
        sub = induced_subgraph(host, combo)
        if len(sub.edges) != len(pattern.edges):
            continue
        if canonical_form(sub) == target:
            return set(combo)
    return None


def all_graphs(n):
    """All non-isomorphic graphs on exactly n vertices.

    Built by extending the (n-1)-vertex list with one new vertex joined to
    every possible neighbourhood, de-duplicated by canonical form.
    """
    if n < 1:
        raise InputError("need n >= 1")
    graphs = [Graph(1)]
    for m in range(2, n + 1):
        seen = {}
        for g in graphs:
            base = list(g.edges)
            for nbhd in range(1 << (m - 1)):
                extra = [(i + 1, m) for i in range(m - 1) if nbhd >> i & 1]
                cand = Graph(m, base + extra)
                seen.setdefault(canonical_form(cand), cand)
        graphs = [seen[k] for k in sorted(seen)]
    return graphs


# --- text formats ---------------------------------------------------------

def parse_graph(text):
    """Parse the `graph <n>` / `e <i> <j>` format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate graph header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise InputError(f"line {lineno}: expected `graph <n>`")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before graph header")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected `e <i> <j>`")
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError as exc:
                raise InputError(f"line {lineno}: bad edge endpoints") from exc
        else:
            raise InputError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise InputError("missing `graph <n>` header")
    return Graph(n, edges)


def format_graph(g):
    lines = [f"graph {g.n}"]
    lines += [f"e {i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_dot(g):
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {i} -- {j};" for i, j in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
