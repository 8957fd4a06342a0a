"""Coupling graphs, snake-chain routing data, and built-in device fixtures.

A TopologySpec drives the hash router: the target qubit starts at chain[0]
and is swapped along the chain; controls that the chain never visits
("stationary" controls) are rotated in place while the target sits at the
adjacent chain node. The built-in fixtures describe the 16-qubit and
27-qubit heavy-hex style devices plus linear nearest-neighbor paths.
"""
from __future__ import annotations

import re
from dataclasses import dataclass


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CouplingGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, u: int) -> list[int]:
        out = [b for a, b in self.edges if a == u]
        out += [a for a, b in self.edges if b == u]
        return sorted(out)


def make_graph(n: int, edges) -> CouplingGraph:
    g = CouplingGraph(n, frozenset(_norm_edge(u, v) for u, v in edges))
    problems = validate_graph(g)
    if problems:
        raise ValueError("; ".join(problems))
    return g


def validate_graph(g: CouplingGraph) -> list[str]:
    problems = []
    for u, v in sorted(g.edges):
        if u == v:
            problems.append(f"self-loop at {u}")
        for w in (u, v):
            if not 0 <= w < g.n:
                problems.append(f"edge ({u},{v}): node {w} out of range")
    if not problems and g.n > 0 and not _connected(g):
        problems.append("graph is not connected")
    return problems


def _connected(g: CouplingGraph) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return len(seen) == g.n


@dataclass(frozen=True)
class TopologySpec:
    """Graph plus the swap path and stationary-control service plan.

    chain: ordered physical nodes the target walks through (chain[0] is the
    start). stationary: (control node, chain index at whose visit it is
    serviced). chain and stationary nodes together cover every qubit once.
    """
    name: str
    graph: CouplingGraph
    chain: tuple[int, ...]
    stationary: tuple[tuple[int, int], ...]

    @property
    def start(self) -> int:
        return self.chain[0]

    def stationary_at(self, chain_index: int) -> list[int]:
        return [c for c, idx in self.stationary if idx == chain_index]


def validate_spec(spec: TopologySpec) -> list[str]:
    problems = list(validate_graph(spec.graph))
    chain = spec.chain
    if not chain:
        return problems + ["empty chain"]
    for a, b in zip(chain, chain[1:]):
        if not spec.graph.has_edge(a, b):
            problems.append(f"chain step {a}-{b} is not an edge")
    for control, idx in spec.stationary:
        if not 0 <= idx < len(chain):
            problems.append(f"stationary {control}: chain index {idx} out of range")
        elif not spec.graph.has_edge(control, chain[idx]):
            problems.append(f"stationary {control} not adjacent to chain node "
                            f"{chain[idx]}")
    covered = list(chain) + [c for c, _ in spec.stationary]
    if len(set(covered)) != len(covered):
        problems.append("chain/stationary nodes overlap")
    if set(covered) != set(range(spec.graph.n)):
        missing = sorted(set(range(spec.graph.n)) - set(covered))
        problems.append(f"nodes not covered by chain or stationary: {missing}")
    return problems


def service_order(spec: TopologySpec) -> list[int]:
    """Physical nodes in the order the first forward pass services them.

    At each chain node: that node's stationary controls first, then the next
    chain node. This is also the initial control placement the builders use.
    """
    order: list[int] = []
    for idx, node in enumerate(spec.chain):
        if idx > 0:
            order.append(node)
        order.extend(spec.stationary_at(idx))
    return order


_GUADALUPE16_EDGES = [
    (0, 1), (1, 2), (1, 4), (2, 3), (3, 5), (4, 7), (5, 8), (6, 7),
    (7, 10), (8, 9), (8, 11), (10, 12), (11, 14), (12, 13), (12, 15), (13, 14),
]

_FALCON27_EDGES = [
    (0, 1), (1, 2), (1, 4), (2, 3), (3, 5), (4, 7), (5, 8), (6, 7),
    (7, 10), (8, 9), (8, 11), (10, 12), (11, 14), (12, 13), (12, 15), (13, 14),
    (14, 16), (15, 18), (16, 19), (17, 18), (18, 21), (19, 20), (19, 22),
    (21, 23), (22, 25), (23, 24), (24, 25), (25, 26),
]

_GUADALUPE16_CHAIN = (1, 4, 7, 10, 12, 13, 14, 11, 8, 5)
_GUADALUPE16_STATIONARY = ((0, 0), (2, 0), (6, 2), (15, 4), (9, 8), (3, 9))

_FALCON27_CHAIN = (1, 4, 7, 10, 12, 15, 18, 21, 23, 24, 25, 22, 19, 16, 14, 11, 8, 5)
_FALCON27_STATIONARY = ((0, 0), (2, 0), (6, 2), (13, 4), (17, 6), (26, 10),
                        (20, 12), (9, 16), (3, 17))

_LNN_RE = re.compile(r"^lnn(\d+)$")


def lnn(k: int) -> TopologySpec:
    if k < 2:
        raise ValueError("lnn needs at least 2 qubits")
    graph = make_graph(k, [(i, i + 1) for i in range(k - 1)])
    return TopologySpec(f"lnn{k}", graph, tuple(range(k)), ())


def builtin(name: str) -> TopologySpec:
    m = _LNN_RE.match(name)
    if m:
        return lnn(int(m.group(1)))
    if name == "guadalupe16":
        spec = TopologySpec(name, make_graph(16, _GUADALUPE16_EDGES),
                            _GUADALUPE16_CHAIN, _GUADALUPE16_STATIONARY)
    elif name == "falcon27":
        spec = TopologySpec(name, make_graph(27, _FALCON27_EDGES),
                            _FALCON27_CHAIN, _FALCON27_STATIONARY)
    else:
        raise KeyError(f"unknown topology {name!r}; expected guadalupe16, "
                       f"falcon27 or lnn<k>")
    problems = validate_spec(spec)
    if problems:  # a failure here is a fixture bug, never patched silently
        raise AssertionError(f"builtin fixture {name} is invalid: {problems}")
    return spec


BUILTIN_DEVICES = ("guadalupe16", "falcon27")


class TopologyParseError(ValueError):
    pass


def load_custom(text: str) -> CouplingGraph:
    """Parse an edge-list file: first line n, then one 'u v' pair per line.

    '#' starts a comment; blank lines and extra whitespace are fine.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise TopologyParseError(f"line {lineno}: expected qubit count")
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise TopologyParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TopologyParseError(f"line {lineno}: non-integer node") from None
        if u == v:
            raise TopologyParseError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise TopologyParseError(f"line {lineno}: node out of range 0..{n - 1}")
        if _norm_edge(u, v) in edges:
            raise TopologyParseError(f"line {lineno}: duplicate edge {u} {v}")
        edges.append(_norm_edge(u, v))
    if n is None:
        raise TopologyParseError("empty topology file")
    g = CouplingGraph(n, frozenset(edges))
    problems = validate_graph(g)
    if problems:
        raise TopologyParseError("; ".join(problems))
    return g


def to_edge_text(g: CouplingGraph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


class NoValidSpecError(ValueError):
    pass


def derive_chain(g: CouplingGraph, start: int,
                 budget: int = 10 ** 6) -> TopologySpec:
    """Search for a chain from `start` that, with stationary assignments,
    covers the whole graph.

    Depth-first over simple paths with a backtracking budget; keeps the
    longest path whose off-path nodes all touch the path. Finding a longest
    simple path is NP-hard in general, so best-effort with an explicit
    failure is the contract.
    """
    if not 0 <= start < g.n:
        raise ValueError(f"start {start} out of range")
    adjacency = {u: g.neighbors(u) for u in range(g.n)}

    best: list[int] | None = None
    expansions = 0
    path = [start]
    on_path = {start}

    def covers(nodes: set[int]) -> bool:
        return all(u in nodes or any(v in nodes for v in adjacency[u])
                   for u in range(g.n))

    def consider():
        nonlocal best
        if (best is None or len(path) > len(best)) and covers(on_path):
            best = list(path)

    def dfs():
        nonlocal expansions
        if expansions >= budget:
            return
        consider()
        # prefer low-degree extensions: endpoints of branches get absorbed
        # early, which empirically finds longer covering paths
        nxt = [v for v in adjacency[path[-1]] if v not in on_path]
        nxt.sort(key=lambda v: (len([w for w in adjacency[v] if w not in on_path]), v))
        for v in nxt:
            expansions += 1
            path.append(v)
            on_path.add(v)
            dfs()
            on_path.discard(v)
            path.pop()
            if expansions >= budget:
                return

    dfs()
    if best is None:
        raise NoValidSpecError(
            f"no chain from {start} covers the graph within budget {budget}")
    chain = tuple(best)
    index = {node: i for i, node in enumerate(chain)}
    stationary = []
    for u in range(g.n):
        if u in index:
            continue
        serviced_at = min(index[v] for v in adjacency[u] if v in index)
        stationary.append((u, serviced_at))
    spec = TopologySpec(f"derived(start={start})", g, chain, tuple(stationary))
    problems = validate_spec(spec)
    if problems:
        raise NoValidSpecError("; ".join(problems))
    return spec
