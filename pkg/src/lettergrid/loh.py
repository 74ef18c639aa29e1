"""Locally ordered hypergraphs: cells, conflicts, splits, inconsistency.

A Loh is a hypergraph whose hyperedges carry total orders that agree on
every cell (elements with identical edge membership).  It is globally
consistent when one linear order extends every hyperedge order, which
happens exactly when the conflict digraph is acyclic; the global
inconsistency is the least number of splits needed to get there.
"""

from .circuits import ConflictDigraph, find_directed_cycle, topological_order
from .errors import BudgetExhausted, InputError


class Loh:
    """Construct via validate(); elements and edge orders are immutable."""

    __slots__ = ("elements", "edges")

    def __init__(self, elements, edges):
        self.elements = frozenset(elements)
        self.edges = {name: tuple(members) for name, members in edges.items()}


def validate(elements, edges):
    """The Loh, or an error naming the offending cell or element."""
    elements = set(elements)
    norm = {}
    for name, members in dict(edges).items():
        members = tuple(members)
        if len(set(members)) != len(members):
            raise InputError(f"edge {name} repeats an element")
        for x in members:
            if x not in elements:
                raise InputError(f"edge {name} uses unknown element {x}")
        if not members:
            raise InputError(f"edge {name} is empty")
        norm[name] = members
    covered = {x for members in norm.values() for x in members}
    isolated = elements - covered
    if isolated:
        raise InputError(f"isolated element {sorted(isolated, key=str)[0]}")
    h = Loh(elements, norm)
    for cell in cells(h):
        probe = next(iter(cell))
        incident = [n for n, members in norm.items() if probe in members]
        base = None
        basename = None
        for name in incident:
            restricted = tuple(x for x in norm[name] if x in cell)
            if base is None:
                base, basename = restricted, name
            elif restricted != base:
                raise InputError(
                    f"cell {sorted(cell, key=str)} ordered differently by "
                    f"edges {basename} and {name}"
                )
    return h


def cells(h):
    """Partition of the elements by hyperedge-membership signature."""
    sig = {}
    for x in h.elements:
        key = frozenset(n for n, members in h.edges.items() if x in members)
        sig.setdefault(key, set()).add(x)
    return sorted((frozenset(s) for s in sig.values()), key=lambda c: sorted(c, key=str))


def conflict(h):
    """Arc (x, y) whenever x comes before y in some hyperedge."""
    arcs = set()
    for members in h.edges.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                arcs.add((members[i], members[j]))
    return ConflictDigraph(tuple(sorted(h.elements, key=str)), frozenset(arcs))


def is_globally_consistent(h):
    """A linear order restricting to every hyperedge order, or None."""
    conf = conflict(h)
    nodes = sorted(h.elements, key=str)
    order = topological_order(nodes, {(a, b) for a, b in conf.arcs})
    return None if order is None else tuple(order)


def consistency_witness_cycle(h):
    """A directed conflict cycle when inconsistent, else None."""
    conf = conflict(h)
    return find_directed_cycle(sorted(h.elements, key=str), conf.arcs)


def split(h, x):
    """Remove x and cut every hyperedge containing it into its strictly
    below-x and strictly above-x pieces; isolated leftovers are dropped."""
    if x not in h.elements:
        raise InputError(f"unknown element {x}")
    edges = {}
    for name, members in h.edges.items():
        if x not in members:
            edges[name] = members
            continue
        i = members.index(x)
        below, above = members[:i], members[i + 1:]
        if below:
            edges[f"{name}<"] = below
        if above:
            edges[f"{name}>"] = above
    covered = {y for members in edges.values() for y in members}
    return validate(covered, edges)


def _state(h):
    return frozenset(h.edges.values())


def global_inconsistency(h, budget=None):
    """Exact least number of splits reaching global consistency.

    Breadth-first over split sequences with visited-state memoisation;
    the optional budget caps the search depth and raises with the depth
    reached as a lower bound."""
    if is_globally_consistent(h) is not None:
        return 0
    max_depth = budget if isinstance(budget, int) else None
    frontier = [h]
    seen = {_state(h)}
    depth = 0
    while frontier:
        depth += 1
        if max_depth is not None and depth > max_depth:
            raise BudgetExhausted(
                f"inconsistency at least {depth}", best=depth
            )
        nxt = []
        for cur in frontier:
            for x in sorted(cur.elements, key=str):
                child = split(cur, x)
                key = _state(child)
                if key in seen:
                    continue
                seen.add(key)
                if is_globally_consistent(child) is not None:
                    return depth
                nxt.append(child)
        frontier = nxt
    raise AssertionError("splitting everything always reaches consistency")


def from_chain_circuit(cc):
    """One hyperedge per consecutive bag pair, ordered by the pair's
    forced precedences with twins broken by bag then bag position."""
    edges = {}
    for bi in range(cc.k):
        nj = cc.next_bag(bi)
        members = list(cc.bags[bi]) + list(cc.bags[nj])
        arcs = set()
        for v in cc.bags[bi]:
            for w in cc.bags[nj]:
                if cc.graph.has_edge(v, w):
                    arcs.add((v, w))
                else:
                    arcs.add((w, v))
        order = _tie_broken_topo(members, arcs, cc, bi)
        if order is None:
            raise AssertionError("pair conflicts cyclic in a valid circuit")
        edges[f"e{bi + 1}_{nj + 1}"] = tuple(order)
    return validate(set(range(1, cc.graph.n + 1)), edges)


def _tie_broken_topo(members, arcs, cc, first_bag):
    import heapq

    key = {
        v: (0 if cc.bag_of[v] == first_bag else 1, cc.pos_of[v], v) for v in members
    }
    indeg = {v: 0 for v in members}
    out = {v: [] for v in members}
    for a, b in arcs:
        indeg[b] += 1
        out[a].append(b)
    heap = [(key[v], v) for v in members if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, (key[w], w))
    return order if len(order) == len(members) else None


# --- text format ----------------------------------------------------------

def parse_loh(text):
    """`elem <name> ...` then `edge <name> : <ordered members>` lines."""
    elements = set()
    edges = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("elem"):
            elements.update(line.split()[1:])
        elif line.startswith("edge"):
            parts = line.split(":")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected `edge <name> : ...`")
            head = parts[0].split()
            if len(head) != 2:
                raise InputError(f"line {lineno}: bad edge header")
            if head[1] in edges:
                raise InputError(f"line {lineno}: duplicate edge {head[1]}")
            edges[head[1]] = tuple(parts[1].split())
        else:
            raise InputError(f"line {lineno}: unknown directive")
    return validate(elements, edges)


def format_loh(h):
    lines = ["elem " + " ".join(str(x) for x in sorted(h.elements, key=str))]
    for name in sorted(h.edges):
        lines.append(f"edge {name} : " + " ".join(str(x) for x in h.edges[name]))
    return "\n".join(lines) + "\n"
