"""k-chain circuits: bagged, ordered graphs with chain links in a cycle.

A chain circuit has k >= 3 independent bags arranged cyclically, edges
only between consecutive bags forming chain graphs, and one order per
bag that is simultaneously decreasing toward the next bag and
increasing toward the previous one.  The conflict digraph records the
precedences any cyclic-decoder word must respect; when it is acyclic a
k-letter word exists, and otherwise the recursive red/blue encoder
still produces an explicit letter-graph representation.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import Budget, InputError
from .graphs import Graph, induced_subgraph, set_to_mask
from .letters import Decoder, decode


class ChainCircuit:
    """Graph plus ordered bags; construct via validate()."""

    __slots__ = ("graph", "bags", "bag_of", "pos_of")

    def __init__(self, graph, bags):
        self.graph = graph
        self.bags = tuple(tuple(b) for b in bags)
        self.bag_of = {}
        self.pos_of = {}
        for bi, bag in enumerate(self.bags):
            for p, v in enumerate(bag):
                self.bag_of[v] = bi
                self.pos_of[v] = p

    @property
    def k(self):
        return len(self.bags)

    def next_bag(self, bi):
        return (bi + 1) % self.k

    def prev_bag(self, bi):
        return (bi - 1) % self.k


@dataclass(frozen=True)
class ConflictDigraph:
    nodes: tuple
    arcs: frozenset


@dataclass(frozen=True)
class Encoding:
    """Decoder + word + the word-position -> vertex correspondence."""

    decoder: Decoder
    word: tuple
    vertices: tuple

    @property
    def letters_used(self):
        return len(set(self.word))


def validate(graph, bags):
    """Check all chain-circuit conditions; raises naming the violation."""
    bags = [tuple(b) for b in bags]
    k = len(bags)
    if k < 3:
        raise InputError(f"need at least 3 bags, got {k}")
    seen = [v for bag in bags for v in bag]
    if len(set(seen)) != len(seen):
        raise InputError("bags overlap")
    if set(seen) != set(range(1, graph.n + 1)):
        raise InputError("bags do not cover the vertex set")
    cc = ChainCircuit(graph, bags)
    for bi, bag in enumerate(bags):
        for a, b in combinations(bag, 2):
            if graph.has_edge(a, b):
                raise InputError(f"bag {bi + 1} not independent: edge {a}-{b}")
    for a, b in graph.edges:
        d = (cc.bag_of[a] - cc.bag_of[b]) % k
        if d not in (1, k - 1):
            raise InputError(f"stray edge {a}-{b} between non-consecutive bags")
    for bi in range(k):
        nj = cc.next_bag(bi)
        lo, hi = bags[bi], bags[nj]
        himask = set_to_mask(hi)
        nbhds = [graph.adj[v] & himask for v in lo]
        for x, y in combinations(nbhds, 2):
            if x | y not in (x, y):
                raise InputError(f"non-chain pair between bags {bi + 1} and {nj + 1}")
        # order: decreasing toward the next bag...
        for p in range(len(lo) - 1):
            if nbhds[p] | nbhds[p + 1] != nbhds[p]:
                raise InputError(
                    f"bag {bi + 1} order not decreasing toward bag {nj + 1}"
                )
        # ...which makes the next bag's order increasing back automatically
        # only if checked; do so explicitly.
        lomask = set_to_mask(lo)
        back = [graph.adj[v] & lomask for v in hi]
        for p in range(len(hi) - 1):
            if back[p] | back[p + 1] != back[p + 1]:
                raise InputError(
                    f"bag {nj + 1} order not increasing toward bag {bi + 1}"
                )
    return cc


def generate_ckl(k, l):
    """The chain circuit C_{k,l}: l disjoint k-cycles plus all the
    forward edges v_{i,m} ~ v_{i+1,n} for m < n."""
    if k < 3:
        raise InputError("need k >= 3")
    if l < 1:
        raise InputError("need l >= 1")

    def label(i, j):
        return (i - 1) * l + j

    edges = []
    for i in range(1, k + 1):
        ni = i % k + 1
        for m in range(1, l + 1):
            for n in range(m, l + 1):
                edges.append((label(i, m), label(ni, n)))
    bags = [tuple(label(i, j) for j in range(1, l + 1)) for i in range(1, k + 1)]
    return validate(Graph(k * l, edges), bags)


def cc_complement(cc):
    """Complement the edges between consecutive bags; bag orders reverse."""
    k = cc.k
    edges = set()
    for bi in range(k):
        nj = cc.next_bag(bi)
        for a in cc.bags[bi]:
            for b in cc.bags[nj]:
                if not cc.graph.has_edge(a, b):
                    edges.add((min(a, b), max(a, b)))
    bags = [tuple(reversed(bag)) for bag in cc.bags]
    return validate(Graph(cc.graph.n, edges), bags)


def conflict(cc):
    """Arc (v, w) for edges v in A_i, w in A_{i+1}; arc (w, v) for the
    non-edges between the same pair."""
    arcs = set()
    for bi in range(cc.k):
        nj = cc.next_bag(bi)
        for v in cc.bags[bi]:
            for w in cc.bags[nj]:
                if cc.graph.has_edge(v, w):
                    arcs.add((v, w))
                else:
                    arcs.add((w, v))
    nodes = tuple(range(1, cc.graph.n + 1))
    return ConflictDigraph(nodes, frozenset(arcs))


def topological_order(nodes, arcs):
    """Kahn's algorithm with smallest-node tie-break; None if cyclic."""
    indeg = {v: 0 for v in nodes}
    out = {v: [] for v in nodes}
    for a, b in arcs:
        indeg[b] += 1
        out[a].append(b)
    import heapq

    heap = [v for v in nodes if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != len(nodes):
        return None
    return order


def find_directed_cycle(nodes, arcs):
    """Some directed cycle as a node list, or None; deterministic DFS."""
    out = {v: [] for v in nodes}
    for a, b in sorted(arcs):
        out[a].append(b)
    state = {v: 0 for v in nodes}  # 0 new, 1 on stack, 2 done
    stack = []

    def dfs(v):
        state[v] = 1
        stack.append(v)
        for w in out[v]:
            if state[w] == 1:
                return stack[stack.index(w):]
            if state[w] == 0:
                found = dfs(w)
                if found is not None:
                    return found
        stack.pop()
        state[v] = 2
        return None

    for v in sorted(nodes):
        if state[v] == 0:
            found = dfs(v)
            if found is not None:
                return found
    return None


def cyclic_decoder(k):
    names = [f"a{i}" for i in range(1, k + 1)]
    return Decoder(names, [(names[i], names[(i + 1) % k]) for i in range(k)])


def cyclic_word(cc):
    """Encoding over the k cyclic letters if the conflict digraph is
    acyclic, else None (see conflict_cycle for the witness)."""
    conf = conflict(cc)
    order = topological_order(conf.nodes, conf.arcs)
    if order is None:
        return None
    d = cyclic_decoder(cc.k)
    word = tuple(d.letters[cc.bag_of[v]] for v in order)
    enc = Encoding(d, word, tuple(order))
    _check_encoding(enc, cc.graph)
    return enc


def conflict_cycle(cc):
    """Witness directed cycle of the conflict digraph, or None."""
    conf = conflict(cc)
    return find_directed_cycle(conf.nodes, conf.arcs)


def _check_encoding(enc, graph):
    decoded = decode(enc.decoder, enc.word)
    pos = {v: i for i, v in enumerate(enc.vertices, 1)}
    want = {(min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in graph.edges}
    if decoded.edges != frozenset(want):
        raise AssertionError("encoding failed the decode round-trip")


def find_cycle_subgraph(cc, p, budget=None):
    """Lexicographically least bag-respecting induced C_{k,p}, or None.

    Chooses p vertices per bag in bag order; the copy must realize the
    C_{k,p} adjacency (layer m to next-bag layer n adjacent iff m <= n).
    """
    if p < 1:
        raise InputError("need p >= 1")
    budget = budget or Budget()
    k = cc.k
    chosen = []

    def compatible(lo, hi):
        for m in range(p):
            for n in range(p):
                if cc.graph.has_edge(lo[m], hi[n]) != (m <= n):
                    return False
        return True

    def rec(bi):
        if bi == k:
            return compatible(chosen[-1], chosen[0])
        for combo in combinations(cc.bags[bi], p):
            budget.tick("cycle-subgraph search")
            if bi > 0 and not compatible(chosen[-1], combo):
                continue
            chosen.append(combo)
            if rec(bi + 1):
                return True
            chosen.pop()
        return False

    if rec(0):
        return {v for combo in chosen for v in combo}
    return None


# --- red/blue split and the recursive encoder -----------------------------

def _leftmost_neighbour(cc, v, bag_index):
    for w in cc.bags[bag_index]:
        if cc.graph.has_edge(v, w):
            return w
    return None


def _rightmost_neighbour(cc, v, bag_index):
    for w in reversed(cc.bags[bag_index]):
        if cc.graph.has_edge(v, w):
            return w
    return None


def _blue_cycle(cc, seed_by_bag):
    """Iterate leftmost-neighbour-forward from the seed until a vertex
    repeats; the periodic part is one vertex per bag."""
    v = seed_by_bag[0]
    seen = {}
    orbit = []
    while v not in seen:
        seen[v] = len(orbit)
        orbit.append(v)
        v = _leftmost_neighbour(cc, v, cc.next_bag(cc.bag_of[v]))
        assert v is not None, "orbit vertex lost its forward neighbour"
    cycle = orbit[seen[v]:]
    assert len(cycle) == cc.k
    blue = {}
    for u in cycle:
        blue[cc.bag_of[u]] = u
    return blue


def _red_orbit(cc, start):
    """Iterate rightmost-neighbour-backward; returns (full orbit,
    red cycle by bag)."""
    v = start
    seen = {}
    orbit = []
    while v not in seen:
        seen[v] = len(orbit)
        orbit.append(v)
        v = _rightmost_neighbour(cc, v, cc.prev_bag(cc.bag_of[v]))
        assert v is not None, "orbit vertex lost its backward neighbour"
    cycle = orbit[seen[v]:]
    assert len(cycle) == cc.k
    red = {}
    for u in cycle:
        red[cc.bag_of[u]] = u
    return orbit, red


def _split_parts(cc, seed):
    """Per-bag left/middle/right vertex lists plus blue/red/orbit data."""
    seed_by_bag = {}
    for v in seed:
        bi = cc.bag_of.get(v)
        if bi is None:
            raise InputError(f"seed vertex {v} unknown")
        if bi in seed_by_bag:
            raise InputError("seed has two vertices in one bag")
        seed_by_bag[bi] = v
    if len(seed_by_bag) != cc.k:
        raise InputError("seed must pick one vertex per bag")
    for bi in range(cc.k):
        if not cc.graph.has_edge(seed_by_bag[bi], seed_by_bag[cc.next_bag(bi)]):
            raise InputError("seed is not a bag-respecting cycle")
    blue = _blue_cycle(cc, seed_by_bag)
    orbit, red = _red_orbit(cc, blue[cc.k - 1])
    left, middle, right = [], [], []
    for bi, bag in enumerate(cc.bags):
        bp, rp = cc.pos_of[blue[bi]], cc.pos_of[red[bi]]
        left.append([v for v in bag if cc.pos_of[v] < bp])
        middle.append([v for v in bag if bp <= cc.pos_of[v] <= rp])
        right.append([v for v in bag if cc.pos_of[v] > rp])
    return left, middle, right, blue, red, orbit


def _subcircuit(cc, per_bag):
    """Chain circuit induced on the given per-bag vertex lists; returns
    (circuit, new->old label map)."""
    verts = sorted(v for bag in per_bag for v in bag)
    sub = induced_subgraph(cc.graph, verts)
    new_of = {v: i + 1 for i, v in enumerate(verts)}
    bags = [tuple(new_of[v] for v in bag) for bag in per_bag]
    return ChainCircuit(sub, bags), {i + 1: v for i, v in enumerate(verts)}


def red_blue_split(cc, seed):
    """(left, middle, right, blue, red): sub-circuits strictly left of the
    blue cycle, between the cycles inclusive, and strictly right of the
    red cycle, with the original labels recoverable per part."""
    left, middle, right, blue, red, _ = _split_parts(cc, seed)
    return (
        _subcircuit(cc, left)[0],
        _subcircuit(cc, middle)[0],
        _subcircuit(cc, right)[0],
        set(blue.values()),
        set(red.values()),
    )


def _encode_middle(cc, middle, blue, red, orbit):
    """Letters/word/vertex order for the middle part.

    Spiral-cycle vertices (blue cycle plus the whole rightmost-backward
    orbit) each get a fresh letter; the remaining vertices are grouped
    per bag by their gap between consecutive spiral visits, one letter
    per group.  Arcs between groups follow from the actual cross edges:
    complete, empty, or a chain pair oriented by the conflict rule.
    """
    singles = set(blue.values()) | set(orbit)
    classes = {}   # class key -> list of vertices
    cls_of = {}
    cls_bag = {}
    for bi, bag in enumerate(middle):
        spiral_here = [v for v in cc.bags[bi] if v in singles and v in set(bag)]
        spiral_pos = sorted(cc.pos_of[v] for v in spiral_here)
        for v in bag:
            if v in singles:
                key = ("s", v)
            else:
                gap = sum(1 for p in spiral_pos if p < cc.pos_of[v])
                key = ("c", bi, gap)
            classes.setdefault(key, []).append(v)
            cls_of[v] = key
            cls_bag[key] = bi
    arcs = set()
    constraints = set()
    verts = sorted(cls_of)
    for x, y in combinations(sorted(classes), 2):
        bx, by = cls_bag[x], cls_bag[y]
        if bx == by:
            continue
        if (by - bx) % cc.k == 1:
            lo, hi = x, y
        elif (bx - by) % cc.k == 1:
            lo, hi = y, x
        else:
            continue
        pairs = [(u, v) for u in classes[lo] for v in classes[hi]]
        hits = sum(1 for u, v in pairs if cc.graph.has_edge(u, v))
        if hits == len(pairs):
            arcs.add((lo, hi))
            arcs.add((hi, lo))
        elif hits > 0:
            arcs.add((lo, hi))
            for u, v in pairs:
                if cc.graph.has_edge(u, v):
                    constraints.add((u, v))
                else:
                    constraints.add((v, u))
    order = topological_order(verts, constraints)
    if order is None:
        raise AssertionError("middle-part constraints are cyclic")

    def name(key):
        return f"s{key[1]}" if key[0] == "s" else f"c{key[1] + 1}_{key[2]}"

    letter_arcs = {(name(a), name(b)) for a, b in arcs}
    word = [name(cls_of[v]) for v in order]
    letter_bag = {name(key): cls_bag[key] for key in classes}
    return letter_arcs, word, list(order), letter_bag


def _rename(prefix, arcs, word, letter_bag):
    return (
        {(prefix + a, prefix + b) for a, b in arcs},
        [prefix + sym for sym in word],
        {prefix + sym: bag for sym, bag in letter_bag.items()},
    )


def _encode(cc, budget):
    """Returns (arcs on letters, word, vertex order, letter -> bag)."""
    conf = conflict(cc)
    order = topological_order(conf.nodes, conf.arcs)
    if order is not None:
        names = [f"a{i + 1}" for i in range(cc.k)]
        arcs = {(names[i], names[(i + 1) % cc.k]) for i in range(cc.k)}
        word = [names[cc.bag_of[v]] for v in order]
        bag_map = {names[i]: i for i in range(cc.k)}
        return arcs, word, list(order), bag_map

    seed = find_cycle_subgraph(cc, 1, budget)
    if seed is None:
        ccc = cc_complement(cc)
        seedc = find_cycle_subgraph(ccc, 1, budget)
        if seedc is None:
            raise AssertionError(
                "cyclic conflict digraph without a cycle in the circuit "
                "or its complement"
            )
        arcs, word, verts, bag_map = _encode(ccc, budget)
        flipped = set()
        letters = set(bag_map)
        for a in letters:
            for b in letters:
                if a == b or (bag_map[a] - bag_map[b]) % cc.k not in (1, cc.k - 1):
                    continue
                if (a, b) not in arcs:
                    flipped.add((a, b))
        kept = {(a, b) for a, b in arcs
                if a == b or (bag_map[a] - bag_map[b]) % cc.k not in (1, cc.k - 1)}
        return kept | flipped, word, verts, bag_map

    left, middle, right, blue, red, orbit = _split_parts(cc, seed)
    m_arcs, m_word, m_verts, m_bags = _encode_middle(cc, middle, blue, red, orbit)
    m_arcs, m_word, m_bags = _rename("M:", m_arcs, m_word, m_bags)
    parts = {"M": (m_arcs, m_word, m_verts, m_bags)}
    for tag, per_bag in (("L", left), ("R", right)):
        sub, back = _subcircuit(cc, per_bag)
        if sub.graph.n == 0:
            parts[tag] = (set(), [], [], {})
            continue
        arcs, word, verts, bag_map = _encode(sub, budget)
        arcs, word, bag_map = _rename(tag + ":", arcs, word, bag_map)
        parts[tag] = (arcs, word, [back[v] for v in verts], bag_map)

    all_arcs = set()
    word = []
    verts = []
    bag_map = {}
    for tag in ("L", "M", "R"):
        arcs, w, vs, bm = parts[tag]
        all_arcs |= arcs
        word += w
        verts += vs
        bag_map.update(bm)
    # cross-part structure: left letters are complete to next-bag letters
    # of middle/right, right letters complete to previous-bag letters of
    # middle/left; every other cross pair is empty.
    for a, bag_a in parts["L"][3].items():
        for tag in ("M", "R"):
            for b, bag_b in parts[tag][3].items():
                if (bag_b - bag_a) % cc.k == 1:
                    all_arcs.add((a, b))
                    all_arcs.add((b, a))
    for a, bag_a in parts["R"][3].items():
        for tag in ("M", "L"):
            for b, bag_b in parts[tag][3].items():
                if (bag_a - bag_b) % cc.k == 1:
                    all_arcs.add((a, b))
                    all_arcs.add((b, a))
    return all_arcs, word, verts, bag_map


def encode(cc, budget=None):
    """Letter-graph representation of a chain circuit's graph.

    Conflict acyclic: the k-letter cyclic word.  Otherwise split at a
    bag-respecting cycle (of the circuit or, failing that, of its
    complement) and recurse; the result is verified by decoding before
    being returned.
    """
    budget = budget or Budget()
    arcs, word, verts, _ = _encode(cc, budget)
    used = []
    for sym in word:
        if sym not in used:
            used.append(sym)
    decoder = Decoder(used, {(a, b) for a, b in arcs if a in used and b in used})
    enc = Encoding(decoder, tuple(word), tuple(verts))
    _check_encoding(enc, cc.graph)
    return enc


# --- generators -----------------------------------------------------------

def generate_twisted(k, l):
    """C_{k,l}-like graph with the chain between bags 2 and 3 reversed.

    Returns (graph, bags, signs): bags in their canonical orders and the
    canonical per-ordered-pair monotonicity signs (+1 increasing, -1
    decreasing); the twisted pair gets the double minus.
    """
    if k < 3:
        raise InputError("need k >= 3")
    if l < 1:
        raise InputError("need l >= 1")

    def label(i, j):
        return (i - 1) * l + j

    edges = []
    for i in range(1, k + 1):
        ni = i % k + 1
        for m in range(1, l + 1):
            for n in range(1, l + 1):
                if i == 2:
                    adjacent = m + n <= l + 1
                else:
                    adjacent = m <= n
                if adjacent:
                    edges.append((label(i, m), label(ni, n)))
    graph = Graph(k * l, edges)
    bags = tuple(tuple(label(i, j) for j in range(1, l + 1)) for i in range(1, k + 1))
    signs = {}
    for i in range(1, k + 1):
        ni = i % k + 1
        if i == 2:
            signs[(i, ni)] = -1
            signs[(ni, i)] = -1
        else:
            signs[(i, ni)] = -1
            signs[(ni, i)] = 1
    return graph, bags, signs


def random_chain_circuit(rng, k=None, max_bag=4):
    """Random valid chain circuit; neighbourhoods toward the next bag are
    random nested up-sets, which realizes every chain pair compatible
    with the bag orders."""
    k = k if k is not None else rng.choice([3, 4, 5])
    sizes = [rng.randint(1, max_bag) for _ in range(k)]
    start = [0]
    for s in sizes:
        start.append(start[-1] + s)
    bags = [tuple(range(start[i] + 1, start[i + 1] + 1)) for i in range(k)]
    edges = []
    for i in range(k):
        ni = (i + 1) % k
        a, b = sizes[i], sizes[ni]
        thresholds = sorted(rng.randint(1, b + 1) for _ in range(a))
        for m in range(a):
            for n in range(thresholds[m], b + 1):
                edges.append((bags[i][m], bags[ni][n - 1]))
    return validate(Graph(start[-1], edges), bags)


# --- text format ----------------------------------------------------------

def parse_chain_circuit(text):
    """Graph block followed by `bag <b> : <v1> <v2> ...` lines."""
    from .graphs import parse_graph

    graph_lines = []
    bag_lines = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("bag"):
            parts = line.split(":")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected `bag <b> : ...`")
            head = parts[0].split()
            if len(head) != 2 or not head[1].isdigit():
                raise InputError(f"line {lineno}: bad bag header")
            idx = int(head[1])
            if idx in bag_lines:
                raise InputError(f"line {lineno}: duplicate bag {idx}")
            try:
                bag_lines[idx] = tuple(int(v) for v in parts[1].split())
            except ValueError as exc:
                raise InputError(f"line {lineno}: bad bag members") from exc
        else:
            graph_lines.append(line)
    graph = parse_graph("\n".join(graph_lines))
    if sorted(bag_lines) != list(range(1, len(bag_lines) + 1)):
        raise InputError("bag indices must be 1..k")
    bags = [bag_lines[i] for i in sorted(bag_lines)]
    return validate(graph, bags)


def format_chain_circuit(cc):
    from .graphs import format_graph

    lines = [format_graph(cc.graph).rstrip("\n")]
    for i, bag in enumerate(cc.bags, 1):
        lines.append(f"bag {i} : " + " ".join(str(v) for v in bag))
    return "\n".join(lines) + "\n"
