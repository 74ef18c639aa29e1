"""Chain co-chromatic parameters and their certificates.

gamma: partition into homogeneous bags with 2K2-free bipartite graphs
between all pairs.  sigma: additionally each bag carries one total
order that is monotone (increasing or decreasing, per neighbour bag) in
neighbourhoods.  lambda: additionally each bag pair has exactly one
increasing side.  The solvers enumerate set partitions by restricted
growth strings and decide order existence by sign enumeration over
neighbourhood-inclusion preorders.
"""

from dataclasses import dataclass
from itertools import product

from .errors import Budget, InputError
from .graphs import (
    Graph,
    is_chain_pair,
    is_homogeneous,
    set_to_mask,
)
from .perms import Permutation, contains_pattern

LEVELS = ("chain", "semi", "proper")


@dataclass(frozen=True)
class PartitionCertificate:
    """Named ordered bags; optional per-ordered-pair signs (+1/-1)."""

    names: tuple
    bags: tuple
    signs: dict = None


@dataclass(frozen=True)
class LinkedChainGraph:
    n: int
    graph: Graph
    a: tuple  # x_1..x_n
    b: tuple  # y_1..y_n
    c: tuple  # z_1..z_n
    pi: Permutation


@dataclass(frozen=True)
class ApGridWitness:
    x: tuple
    y: tuple
    colour: object


def _check_cover(g, bags):
    seen = [v for bag in bags for v in bag]
    if len(set(seen)) != len(seen) or set(seen) != set(range(1, g.n + 1)):
        raise InputError("bags must partition the vertex set")


def _nbhd_masks(g, bag, other):
    omask = set_to_mask(other)
    return [g.adj[v] & omask for v in bag]


def _monotone(masks, direction):
    """Non-strict nestedness along the order: +1 increasing, -1 decreasing."""
    for p in range(len(masks) - 1):
        a, b = masks[p], masks[p + 1]
        if direction == 1 and a | b != b:
            return False
        if direction == -1 and a | b != a:
            return False
    return True


def chain_pairs_ok(g, bags):
    for i in range(len(bags)):
        if not is_homogeneous(g, bags[i]):
            return False
        for j in range(i + 1, len(bags)):
            if not is_chain_pair(g, bags[i], bags[j]):
                return False
    return True


def _pair_has_edges(g, a, b):
    bmask = set_to_mask(b)
    return any(g.adj[v] & bmask for v in a)


def check_partition(g, cert, level):
    """Certificate check at the requested strength.

    chain ignores the stored orders; semi requires every bag order to be
    monotone toward every neighbour bag (per declared sign when signs
    are present); proper additionally wants exactly one increasing side
    per pair with cross edges (searched over orientations when no signs
    are declared)."""
    if level not in LEVELS:
        raise InputError(f"unknown level {level!r}")
    bags = cert.bags
    _check_cover(g, bags)
    if not chain_pairs_ok(g, bags):
        return False
    if level == "chain":
        return True
    return not proper_violations(g, cert, level)


def proper_violations(g, cert, level="proper"):
    """Bag-pair index pairs (1-based) violating the semi/proper order
    conditions; empty means the certificate passes."""
    bags = cert.bags
    names = cert.names
    signs = cert.signs
    bad = []
    for i in range(len(bags)):
        for j in range(i + 1, len(bags)):
            if not _pair_has_edges(g, bags[i], bags[j]):
                continue
            fwd = _nbhd_masks(g, bags[i], bags[j])
            rev = _nbhd_masks(g, bags[j], bags[i])
            if signs is not None:
                si = signs.get((names[i], names[j]))
                sj = signs.get((names[j], names[i]))
                if si is None or sj is None:
                    raise InputError(
                        f"missing sign for bag pair {names[i]}/{names[j]}"
                    )
                ok = _monotone(fwd, si) and _monotone(rev, sj)
                if level == "proper":
                    ok = ok and {si, sj} == {1, -1}
            else:
                if level == "semi":
                    ok = (_monotone(fwd, 1) or _monotone(fwd, -1)) and (
                        _monotone(rev, 1) or _monotone(rev, -1)
                    )
                else:
                    ok = (_monotone(fwd, 1) and _monotone(rev, -1)) or (
                        _monotone(fwd, -1) and _monotone(rev, 1)
                    )
            if not ok:
                bad.append((i + 1, j + 1))
    return bad


# --- order existence for a set partition ----------------------------------

def _strict_relations(g, bag, other):
    """Pairs (p, q) of positions with N(bag[p]) strictly inside N(bag[q])."""
    masks = _nbhd_masks(g, bag, other)
    rel = []
    for p in range(len(masks)):
        for q in range(len(masks)):
            if p != q and masks[p] != masks[q] and masks[p] | masks[q] == masks[q]:
                rel.append((p, q))
    return rel


def _acyclic(n, arcs):
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in arcs:
        indeg[b] += 1
        out[a].append(b)
    stack = [v for v in range(n) if indeg[v] == 0]
    done = 0
    while stack:
        v = stack.pop()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return done == n


def semi_orders_exist(g, bags):
    """Can each bag be totally ordered monotonically toward every
    neighbour?  Bags are independent of each other: each needs one sign
    per neighbour bag making the union of strict preorders acyclic."""
    if not chain_pairs_ok(g, bags):
        return False
    t = len(bags)
    for i in range(t):
        rels = []
        for j in range(t):
            if j == i or not _pair_has_edges(g, bags[i], bags[j]):
                continue
            strict = _strict_relations(g, bags[i], bags[j])
            if strict:
                rels.append(strict)
        ok = False
        for dirs in product((1, -1), repeat=len(rels)):
            arcs = []
            for d, strict in zip(dirs, rels):
                arcs += strict if d == 1 else [(q, p) for p, q in strict]
            if _acyclic(len(bags[i]), arcs):
                ok = True
                break
        if not ok:
            return False
    return True


def proper_orders_exist(g, bags):
    """Like semi_orders_exist but pair signs are coupled: exactly one of
    the two sides of every pair with cross edges is increasing."""
    if not chain_pairs_ok(g, bags):
        return False
    t = len(bags)
    pairs = []
    strict = {}
    for i in range(t):
        for j in range(i + 1, t):
            if not _pair_has_edges(g, bags[i], bags[j]):
                continue
            sij = _strict_relations(g, bags[i], bags[j])
            sji = _strict_relations(g, bags[j], bags[i])
            if sij or sji:
                pairs.append((i, j))
                strict[(i, j)] = sij
                strict[(j, i)] = sji
    # orientation per relevant pair: True means side i increasing
    for choice in product((True, False), repeat=len(pairs)):
        per_bag = {i: [] for i in range(t)}
        for (i, j), inc_i in zip(pairs, choice):
            sij, sji = strict[(i, j)], strict[(j, i)]
            per_bag[i] += sij if inc_i else [(q, p) for p, q in sij]
            per_bag[j] += [(q, p) for p, q in sji] if inc_i else sji
        if all(_acyclic(len(bags[i]), per_bag[i]) for i in range(t)):
            return True
    return False


def _set_partitions(n, t):
    """Partitions of 1..n into exactly t bags via restricted growth strings."""
    def rec(v, code, used):
        if v > n:
            if used == t:
                bags = [[] for _ in range(t)]
                for vv, c in enumerate(code, 1):
                    bags[c].append(vv)
                yield [tuple(b) for b in bags]
            return
        for c in range(min(used + 1, t)):
            code.append(c)
            yield from rec(v + 1, code, max(used, c + 1))
            code.pop()

    yield from rec(1, [], 0)


def _min_bags(g, accept, budget, what):
    if g.n == 0:
        return 0
    for t in range(1, g.n + 1):
        for bags in _set_partitions(g.n, t):
            budget.tick(what)
            if accept(bags):
                return t
    raise AssertionError("singleton partition must be accepted")


def gamma(g, budget=None):
    """Chain co-chromatic number (desk bound ~12 vertices)."""
    budget = budget or Budget()
    return _min_bags(g, lambda bags: chain_pairs_ok(g, bags), budget, "gamma search")


def sigma(g, budget=None):
    """Locally semi-consistent chain co-chromatic number (~10 vertices)."""
    budget = budget or Budget()
    return _min_bags(g, lambda bags: semi_orders_exist(g, bags), budget, "sigma search")


def lambda_(g, budget=None):
    """Locally consistent chain co-chromatic number (~10 vertices)."""
    budget = budget or Budget()
    return _min_bags(g, lambda bags: proper_orders_exist(g, bags), budget, "lambda search")


# --- linked chain graphs --------------------------------------------------

def linked_chain(pi):
    """The 3n-vertex graph with parts A, B, C where y_j's neighbourhoods
    are the intervals x_1..x_j and z_{pi^{-1}(j)}..z_n."""
    n = len(pi)
    inv = pi.inverse()
    edges = []
    for j in range(1, n + 1):
        y = n + j
        for i in range(1, j + 1):
            edges.append((i, y))
        for i in range(inv[j], n + 1):
            edges.append((y, 2 * n + i))
    graph = Graph(3 * n, edges)
    return LinkedChainGraph(
        n,
        graph,
        tuple(range(1, n + 1)),
        tuple(range(n + 1, 2 * n + 1)),
        tuple(range(2 * n + 1, 3 * n + 1)),
        pi,
    )


def canonical_certificate(lcg):
    return PartitionCertificate(("A", "B", "C"), (lcg.a, lcg.b, lcg.c))


def check_canonical_semi(lcg):
    """Do the three parts admit semi-consistent orders at all?"""
    return semi_orders_exist(lcg.graph, (lcg.a, lcg.b, lcg.c))


def pattern_monotone_containment(pi, sub):
    """True iff sub's linking permutation occurs in pi as a pattern."""
    return contains_pattern(pi, sub.pi) is not None


# --- monochromatic progression-grid witness search -------------------------------

def ap_grid_search(grid, k):
    """First pair of k-term arithmetic progressions X, Y in [N] with
    X x Y monochromatic under the N x N colouring, or None.

    grid[i-1][j-1] is the colour of (i, j); ordered by (start, step) of
    X then Y."""
    n = len(grid)
    if n > 40 or k > 4:
        raise InputError("supported for N <= 40, k <= 4")
    if k < 1:
        raise InputError("need k >= 1")
    aps = []
    if k == 1:
        aps = [(a,) for a in range(1, n + 1)]
    else:
        for a in range(1, n + 1):
            for d in range(1, n):
                last = a + (k - 1) * d
                if last > n:
                    break
                aps.append(tuple(a + m * d for m in range(k)))
    for x in aps:
        for y in aps:
            colours = {grid[i - 1][j - 1] for i in x for j in y}
            if len(colours) == 1:
                return ApGridWitness(x, y, colours.pop())
    return None


# --- text formats ---------------------------------------------------------

def parse_certificate(text):
    """`bag <name> : <v1> ...` lines plus optional `sign <A> <B> <+|->`."""
    names, bags = [], []
    signs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("bag"):
            parts = line.split(":")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected `bag <name> : ...`")
            head = parts[0].split()
            if len(head) != 2:
                raise InputError(f"line {lineno}: bad bag header")
            names.append(head[1])
            try:
                bags.append(tuple(int(v) for v in parts[1].split()))
            except ValueError as exc:
                raise InputError(f"line {lineno}: bad bag members") from exc
        elif line.startswith("sign"):
            parts = line.split()
            if len(parts) != 4 or parts[3] not in ("+", "-"):
                raise InputError(f"line {lineno}: expected `sign <A> <B> <+|->`")
            signs[(parts[1], parts[2])] = 1 if parts[3] == "+" else -1
        else:
            raise InputError(f"line {lineno}: unknown directive")
    if len(set(names)) != len(names):
        raise InputError("duplicate bag names")
    return PartitionCertificate(tuple(names), tuple(bags), signs or None)


def format_certificate(cert):
    lines = [
        f"bag {name} : " + " ".join(str(v) for v in bag)
        for name, bag in zip(cert.names, cert.bags)
    ]
    if cert.signs:
        for (a, b), s in sorted(cert.signs.items()):
            lines.append(f"sign {a} {b} {'+' if s == 1 else '-'}")
    return "\n".join(lines) + "\n"


def parse_colouring(text):
    """`N k` header then N lines of N colour tokens; returns (grid, k)."""
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty colouring file")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("expected `N k` header")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError("bad colouring header") from exc
    if len(lines) - 1 != n:
        raise InputError(f"expected {n} colouring rows")
    grid = []
    for ln in lines[1:]:
        row = ln.split()
        if len(row) != n:
            raise InputError("colouring row length mismatch")
        grid.append(row)
    return grid, k
