"""QFT construction on coupling graphs: reference circuit, repositioning
schedules, a schedule executor that prices every cascade in CNOTs, a greedy
scheduler for arbitrary chain topologies, and a structural verifier.

A schedule row gives, for one rotation cascade, which logical qubit sits at
each physical position when the cascade starts. The moves performed during
cascade r are exactly the diff between row r and row r+1, and for every
supported schedule they form a single walk: the cascade's target swaps along
adjacent positions, displacing each occupant one step backward. A
displacement of a not-yet-finished qubit rides the fused rotation+swap
(3 CNOTs); rotations with unmoved controls cost 2; a displacement of a
finished qubit is a bare swap (3 CNOTs, no rotation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .circuits import (ANGLE_TOL, Circuit, Gate, Layout, PHYSICAL,
                       angles_close, cnot_count, cp, h)
from .report import CostReport
from .rewrite import decompose_cp, decompose_swap, fuse_cp_swap
from .topology import TopologySpec, builtin, service_order


def reference_qft(n: int) -> Circuit:
    """Logical QFT without the trailing bit-reversal swaps: for each wire a
    Hadamard, then one controlled phase from every later wire, with angle
    pi/2^k at wire distance k. Output wire order is bit-reversed."""
    if n < 1:
        raise ValueError("need at least one qubit")
    gates: list[Gate] = []
    for j in range(n):
        gates.append(h(j))
        for k in range(1, n - j):
            gates.append(cp(j + k, j, math.pi / 2 ** k))
    return Circuit(n, tuple(gates))


@dataclass(frozen=True)
class QftSchedule:
    """Cascade-by-cascade placement of logical qubits on a device.

    rows[r][pos] = logical qubit at `pos` when cascade r+1 starts (None for
    an unused position). Moves during cascade r are the diff between
    consecutive rows; the final cascades may share the last row.
    """
    n: int
    spec: TopologySpec
    rows: tuple[tuple[int | None, ...], ...]


# Placement tables for the built-in devices, row per cascade, 0-based
# logical indices, position order 0..n-1.
_SCHEDULE_16 = (
    (1, 0, 2, 12, 3, 11, 15, 4, 10, 13, 5, 9, 6, 7, 8, 14),
    (1, 3, 2, 0, 4, 12, 15, 5, 11, 13, 6, 10, 7, 8, 9, 14),
    (3, 4, 2, 0, 5, 1, 15, 6, 12, 13, 7, 11, 8, 9, 10, 14),
    (3, 5, 4, 0, 6, 1, 15, 7, 13, 2, 8, 12, 9, 10, 11, 14),
    (5, 6, 4, 0, 7, 1, 15, 8, 3, 2, 9, 13, 10, 11, 12, 14),
    (5, 7, 6, 0, 8, 1, 15, 9, 3, 2, 10, 4, 11, 12, 13, 14),
    (7, 8, 6, 0, 9, 1, 15, 10, 3, 2, 11, 4, 12, 13, 5, 14),
    (7, 9, 8, 0, 10, 1, 15, 11, 3, 2, 12, 4, 13, 6, 5, 14),
    (9, 10, 8, 0, 11, 1, 15, 12, 3, 2, 13, 4, 14, 6, 5, 7),
    (9, 11, 10, 0, 12, 1, 15, 13, 3, 2, 14, 4, 8, 6, 5, 7),
    (11, 12, 10, 0, 13, 1, 15, 14, 3, 2, 9, 4, 8, 6, 5, 7),
    (11, 13, 12, 0, 14, 1, 10, 15, 3, 2, 9, 4, 8, 6, 5, 7),
    (13, 14, 12, 0, 15, 1, 10, 11, 3, 2, 9, 4, 8, 6, 5, 7),
    (12, 13, 14, 0, 15, 1, 10, 11, 3, 2, 9, 4, 8, 6, 5, 7),
    (12, 14, 13, 0, 15, 1, 10, 11, 3, 2, 9, 4, 8, 6, 5, 7),
)

_SCHEDULE_27 = (
    (1, 0, 2, 20, 3, 19, 26, 4, 18, 21, 5, 17, 6, 25, 16, 7, 15, 24, 8, 14, 22, 9, 13, 10, 11, 12, 23),
    (1, 3, 2, 0, 4, 20, 26, 5, 19, 21, 6, 18, 7, 25, 17, 8, 16, 24, 9, 15, 22, 10, 14, 11, 12, 13, 23),
    (3, 4, 2, 0, 5, 1, 26, 6, 20, 21, 7, 19, 8, 25, 18, 9, 17, 24, 10, 16, 22, 11, 15, 12, 13, 14, 23),
    (3, 5, 4, 0, 6, 1, 26, 7, 21, 2, 8, 20, 9, 25, 19, 10, 18, 24, 11, 17, 22, 12, 16, 13, 14, 15, 23),
    (5, 6, 4, 0, 7, 1, 26, 8, 3, 2, 9, 21, 10, 25, 20, 11, 19, 24, 12, 18, 22, 13, 17, 14, 15, 16, 23),
    (5, 7, 6, 0, 8, 1, 26, 9, 3, 2, 10, 4, 11, 25, 21, 12, 20, 24, 13, 19, 22, 14, 18, 15, 16, 17, 23),
    (7, 8, 6, 0, 9, 1, 26, 10, 3, 2, 11, 4, 12, 25, 5, 13, 21, 24, 14, 20, 22, 15, 19, 16, 17, 18, 23),
    (7, 9, 8, 0, 10, 1, 26, 11, 3, 2, 12, 4, 13, 25, 5, 14, 6, 24, 15, 21, 22, 16, 20, 17, 18, 19, 23),
    (9, 10, 8, 0, 11, 1, 26, 12, 3, 2, 13, 4, 14, 25, 5, 15, 6, 24, 16, 22, 7, 17, 21, 18, 19, 20, 23),
    (9, 11, 10, 0, 12, 1, 26, 13, 3, 2, 14, 4, 15, 25, 5, 16, 6, 24, 17, 8, 7, 18, 22, 19, 20, 21, 23),
    (11, 12, 10, 0, 13, 1, 26, 14, 3, 2, 15, 4, 16, 25, 5, 17, 6, 24, 18, 8, 7, 19, 9, 20, 21, 22, 23),
    (11, 13, 12, 0, 14, 1, 26, 15, 3, 2, 16, 4, 17, 25, 5, 18, 6, 24, 19, 8, 7, 20, 9, 21, 22, 23, 10),
    (13, 14, 12, 0, 15, 1, 26, 16, 3, 2, 17, 4, 18, 25, 5, 19, 6, 24, 20, 8, 7, 21, 9, 22, 23, 11, 10),
    (13, 15, 14, 0, 16, 1, 26, 17, 3, 2, 18, 4, 19, 25, 5, 20, 6, 24, 21, 8, 7, 22, 9, 23, 12, 11, 10),
    (15, 16, 14, 0, 17, 1, 26, 18, 3, 2, 19, 4, 20, 25, 5, 21, 6, 24, 22, 8, 7, 23, 9, 13, 12, 11, 10),
    (15, 17, 16, 0, 18, 1, 26, 19, 3, 2, 20, 4, 21, 25, 5, 22, 6, 24, 23, 8, 7, 14, 9, 13, 12, 11, 10),
    (17, 18, 16, 0, 19, 1, 26, 20, 3, 2, 21, 4, 22, 25, 5, 23, 6, 15, 24, 8, 7, 14, 9, 13, 12, 11, 10),
    (17, 19, 18, 0, 20, 1, 26, 21, 3, 2, 22, 4, 23, 25, 5, 24, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (19, 20, 18, 0, 21, 1, 26, 22, 3, 2, 23, 4, 24, 25, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (19, 21, 20, 0, 22, 1, 26, 23, 3, 2, 24, 4, 25, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (21, 22, 20, 0, 23, 1, 26, 24, 3, 2, 25, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (21, 23, 22, 0, 24, 1, 26, 25, 3, 2, 20, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (23, 24, 22, 0, 25, 1, 21, 26, 3, 2, 20, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (23, 25, 24, 0, 26, 1, 21, 22, 3, 2, 20, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (25, 24, 23, 0, 26, 1, 21, 22, 3, 2, 20, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
    (25, 26, 23, 0, 24, 1, 21, 22, 3, 2, 20, 4, 19, 18, 5, 17, 6, 15, 16, 8, 7, 14, 9, 13, 12, 11, 10),
)


def builtin_schedule(device: str) -> QftSchedule:
    if device == "guadalupe16":
        return QftSchedule(16, builtin(device), _SCHEDULE_16)
    if device == "falcon27":
        return QftSchedule(27, builtin(device), _SCHEDULE_27)
    raise KeyError(f"no built-in schedule for {device!r}")


class ScheduleError(ValueError):
    pass


def _row_at(s: QftSchedule, cascade: int) -> tuple[int | None, ...]:
    return s.rows[min(cascade, len(s.rows) - 1)]


def _extract_walk(s: QftSchedule, cascade: int) -> list[int]:
    """Reconstruct the target's walk that turns row `cascade` into the next
    row; raises ScheduleError when the diff is not a single adjacent walk of
    the cascade's target."""
    row = _row_at(s, cascade)
    nxt_row = _row_at(s, cascade + 1)
    target = cascade
    bad_edges: list[str] = []
    diff = {p for p in range(len(row)) if row[p] != nxt_row[p]}
    p0 = row.index(target)
    walk = [p0]
    seen = {p0}
    while True:
        lands = nxt_row[walk[-1]]
        if lands == target:
            break
        if lands is None:
            raise ScheduleError(f"cascade {cascade + 1}: move into empty "
                                f"position {walk[-1]} is ambiguous")
        try:
            nxt_pos = row.index(lands)
        except ValueError:
            raise ScheduleError(f"cascade {cascade + 1}: qubit {lands + 1} "
                                f"appears from nowhere") from None
        if nxt_pos in seen:
            raise ScheduleError(f"cascade {cascade + 1}: row diff is not a "
                                f"single walk (revisits position {nxt_pos})")
        if not s.spec.graph.has_edge(walk[-1], nxt_pos):
            bad_edges.append(f"cascade {cascade + 1}: move {walk[-1]}-{nxt_pos} "
                             f"is not a coupling edge")
        walk.append(nxt_pos)
        seen.add(nxt_pos)
        if len(walk) > len(row):
            raise ScheduleError(f"cascade {cascade + 1}: runaway walk")
    if diff and diff != seen:
        raise ScheduleError(
            f"cascade {cascade + 1}: moved positions {sorted(diff)} are not "
            f"one walk of qubit {target + 1} (walk covers {sorted(seen)})")
    if bad_edges:
        raise ScheduleError("; ".join(bad_edges))
    return walk


def validate_schedule(s: QftSchedule) -> list[str]:
    """Adjacency/consistency diagnostics for every row; empty when clean."""
    diags: list[str] = []
    n_pos = s.spec.graph.n
    expected = set(range(s.n))
    for r, row in enumerate(s.rows):
        if len(row) != n_pos:
            diags.append(f"row {r + 1}: has {len(row)} positions, device has {n_pos}")
            continue
        labels = [q for q in row if q is not None]
        if sorted(labels) != sorted(expected):
            diags.append(f"row {r + 1}: not a permutation of the {s.n} logical qubits")
    if diags:
        return diags
    for cascade in range(s.n):
        try:
            _extract_walk(s, cascade)
        except ScheduleError as e:
            diags.append(str(e))
    return diags


@dataclass(frozen=True)
class ScheduleExecution:
    schedule: QftSchedule
    circuit: Circuit
    report: CostReport
    layout: Layout
    trace: tuple[tuple, ...]
    diagnostics: tuple[str, ...]


def execute_schedule(s: QftSchedule) -> ScheduleExecution:
    """Realize the schedule as a physical circuit.

    Per cascade: Hadamard on the target, in-place controlled phases for
    unmoved adjacent controls (2 CNOTs each), fused rotation+swap for every
    displacement of an unfinished control (3 CNOTs), bare swaps for
    displacements of finished qubits (3 CNOTs, reported as a diagnostic).
    """
    n = s.n
    n_pos = s.spec.graph.n
    gates: list[Gate] = []
    trace: list[tuple] = []
    diags: list[str] = []
    breakdown: list[tuple[str, int]] = []

    for cascade in range(n):
        row = list(_row_at(s, cascade))
        target = cascade
        walk = _extract_walk(s, cascade)
        controls = set(range(cascade + 1, n))

        displaced = [row[p] for p in walk[1:]]
        fused = [q for q in displaced if q in controls]
        in_place = sorted(controls - set(fused))
        # assign each unmoved control to the first walk node adjacent to it
        assignment: dict[int, list[int]] = {p: [] for p in walk}
        for q in in_place:
            qpos = row.index(q)
            node = next((p for p in walk if s.spec.graph.has_edge(p, qpos)), None)
            if node is None:
                raise ScheduleError(
                    f"cascade {cascade + 1}: rotation between {target + 1} "
                    f"and unmoved {q + 1} at {qpos} has no adjacent walk node")
            assignment[node].append(q)

        cost = 0
        gates.append(h(walk[0]))
        trace.append(("h", walk[0], target))
        cur = {p: row[p] for p in range(n_pos)}
        for i, node in enumerate(walk):
            for q in assignment[node]:
                qpos = row.index(q)
                angle = math.pi / 2 ** (q - target)
                gates += decompose_cp(qpos, node, angle)
                trace.append(("cp", qpos, node, q, target, angle))
                cost += 2
            if i + 1 < len(walk):
                nxt = walk[i + 1]
                occupant = cur[nxt]
                if occupant in controls:
                    angle = math.pi / 2 ** (occupant - target)
                    gates += fuse_cp_swap(nxt, node, angle)
                    trace.append(("cpswap", nxt, node, occupant, target, angle))
                else:
                    gates += decompose_swap(node, nxt)
                    trace.append(("swap", node, nxt))
                    diags.append(f"cascade {cascade + 1}: bare swap "
                                 f"{node}-{nxt} moves a finished qubit")
                cur[node], cur[nxt] = cur[nxt], cur[node]
                cost += 3
        breakdown.append((f"cascade {cascade + 1}", cost))

    first, last = s.rows[0], s.rows[-1]
    initial = tuple(first.index(q) for q in range(n))
    final = tuple(last.index(q) for q in range(n))
    perm = []
    for p in range(n_pos):
        q = first[p]
        perm.append(p if q is None else last.index(q))
    layout = Layout(initial, final, tuple(perm))
    report = CostReport(total_cnots=sum(c for _, c in breakdown),
                        breakdown=tuple(breakdown))
    circuit = Circuit(n_pos, tuple(gates), PHYSICAL, layout)
    assert cnot_count(circuit) == report.total_cnots
    return ScheduleExecution(s, circuit, report, layout, tuple(trace),
                             tuple(diags))


# ---------------------------------------------------------------------------
# structural verification


def _expand_trace_event(ev: tuple) -> list[Gate]:
    kind = ev[0]
    if kind == "h":
        return [h(ev[1])]
    if kind == "cp":
        return decompose_cp(ev[1], ev[2], ev[5])
    if kind == "cpswap":
        return fuse_cp_swap(ev[1], ev[2], ev[5])
    if kind == "swap":
        return decompose_swap(ev[1], ev[2])
    raise ValueError(f"unknown trace event {kind!r}")


def verify_structural(circuit: Circuit, execution: ScheduleExecution
                      ) -> tuple[bool, list[str]]:
    """Check that the physical circuit is gate-for-gate the expansion of its
    move trace and that, replayed through the evolving layout, the trace is
    exactly one reference QFT: one Hadamard per logical qubit, one controlled
    phase of angle pi/2^k per ordered pair at distance k, every phase after
    its target's Hadamard and before its control's. Exact on gate identity;
    angles compared within 1e-12."""
    diags: list[str] = []
    s = execution.schedule

    expected: list[tuple[Gate, tuple]] = []
    for ev in execution.trace:
        for g in _expand_trace_event(ev):
            expected.append((g, ev))
    if len(expected) != len(circuit.gates):
        diags.append(f"circuit has {len(circuit.gates)} gates, trace expands "
                     f"to {len(expected)}")
    for i, (got, (want, ev)) in enumerate(zip(circuit.gates, expected)):
        if not got.same_as(want):
            if ev[0] in ("cp", "cpswap"):
                diags.append(f"gate {i}: {got.kind.value}{got.wires} "
                             f"angle={got.angle!r} deviates from the rotation "
                             f"between q{ev[3] + 1} and q{ev[4] + 1}")
            else:
                diags.append(f"gate {i}: {got.kind.value}{got.wires} does not "
                             f"match the move trace")

    # replay the trace against the evolving layout
    layout = list(s.rows[0])
    h_seen: set[int] = set()
    phases: dict[tuple[int, int], float] = {}
    for ev in execution.trace:
        if ev[0] == "h":
            q = layout[ev[1]]
            if q in h_seen:
                diags.append(f"hadamard repeated on q{q + 1}")
            h_seen.add(q)
        elif ev[0] in ("cp", "cpswap"):
            cpos, tpos, angle = ev[1], ev[2], ev[5]
            qc, qt = layout[cpos], layout[tpos]
            if qt not in h_seen:
                diags.append(f"phase on q{qt + 1} before its hadamard")
            if qc in h_seen:
                diags.append(f"phase controlled by q{qc + 1} after its "
                             f"hadamard (cascade order violated)")
            key = (qc, qt)
            if key in phases:
                diags.append(f"duplicate phase for pair q{qc + 1}->q{qt + 1}")
            phases[key] = angle
            if ev[0] == "cpswap":
                layout[cpos], layout[tpos] = layout[tpos], layout[cpos]
        elif ev[0] == "swap":
            a, b = ev[1], ev[2]
            layout[a], layout[b] = layout[b], layout[a]

    if h_seen != set(range(s.n)):
        missing = sorted(set(range(s.n)) - h_seen)
        diags.append(f"missing hadamards for {[q + 1 for q in missing]}")
    for t in range(s.n):
        for c in range(t + 1, s.n):
            want = math.pi / 2 ** (c - t)
            got = phases.pop((c, t), None)
            if got is None:
                diags.append(f"missing phase q{c + 1}->q{t + 1}")
            elif not angles_close(got, want, ANGLE_TOL):
                diags.append(f"phase q{c + 1}->q{t + 1} has angle {got!r}, "
                             f"expected {want!r}")
    for (qc, qt) in phases:
        diags.append(f"unexpected phase q{qc + 1}->q{qt + 1}")
    return (not diags, diags)


# ---------------------------------------------------------------------------
# greedy scheduling for arbitrary chain topologies


def greedy_schedule(n: int, spec: TopologySpec) -> QftSchedule:
    """Generate a valid repositioning schedule for n logical qubits.

    Placement follows the chain service order. Each cascade walks the chain
    just far enough to touch every remaining qubit, then retires the target:
    into an adjacent stationary position when staying on the chain would
    obstruct later cascades, otherwise in place. Total cost stays within
    3 n (n-1) / 2 plus 3 (n-1) retirement slack.
    """
    n_pos = spec.graph.n
    if not 1 <= n <= n_pos:
        raise ValueError(f"n={n} does not fit device of size {n_pos}")
    g = spec.graph
    chain_idx = {node: i for i, node in enumerate(spec.chain)}
    attach = {c: idx for c, idx in spec.stationary}

    def depth(pos: int) -> int:
        return chain_idx[pos] if pos in chain_idx else attach[pos]

    # Initial placement: the first n-1 service-order positions, but with the
    # earliest qubits on the chain and at the head stationaries, and the
    # latest qubits at the remaining stationaries deepest-first. Stationary
    # residents get pulled onto the chain by retirement moves before their
    # own cascade, so every cascade's walk starts at the chain head.
    region = service_order(spec)[:n - 1]
    head = [p for p in region if p in attach and attach[p] == 0]
    chain_part = [p for p in region if p in chain_idx]
    deep = sorted((p for p in region if p in attach and attach[p] > 0),
                  key=lambda p: (-attach[p], p))
    slots = head + chain_part + deep
    row: list[int | None] = [None] * n_pos
    row[spec.chain[0]] = 0
    for i, p in enumerate(slots):
        row[p] = i + 1
    rows = [tuple(row)]

    for j in range(n - 1):
        pos_of = {q: p for p, q in enumerate(row) if q is not None}
        unserviced = set(range(j + 1, n))
        t_pos = pos_of[j]
        visited = {t_pos}

        def future_needed(after: dict[int, int]) -> int:
            return max((depth(after[q]) for q in range(j + 2, n)), default=-1)

        def safe_stop(v: int) -> bool:
            if v not in chain_idx:
                return True  # a stationary spot never blocks the rail
            after = {q: row.index(q) for q in range(j + 2, n)}
            return chain_idx[v] > future_needed(after)

        guard = 0
        while unserviced:
            guard += 1
            if guard > 4 * n_pos:
                raise ScheduleError(f"cascade {j + 1}: walk did not converge")
            v = t_pos
            # service stationary-position qubits adjacent to the target,
            # holding one back when we will park into it
            adj_stats = [u for u in g.neighbors(v)
                         if u not in chain_idx and row[u] in unserviced]
            adj_stats.sort(key=lambda u: row[u])
            others = {q for q in unserviced if pos_of[q] not in adj_stats}
            park_into = None
            if not others and adj_stats and v in chain_idx and not safe_stop(v):
                park_into = adj_stats.pop()  # highest label parks last
            for u in adj_stats:
                unserviced.discard(row[u])
            if not unserviced and park_into is None:
                break
            if park_into is not None:
                q = row[park_into]
                row[v], row[park_into] = q, row[v]
                pos_of[q], pos_of[j] = v, park_into
                unserviced.discard(q)
                t_pos = park_into
                break
            # stop here when everything left is adjacent and parking is safe
            rest = sorted(unserviced)
            if all(g.has_edge(v, pos_of[q]) for q in rest) and safe_stop(v):
                unserviced.clear()
                break
            # advance along the chain toward the deepest remaining need
            needed = max(depth(pos_of[q]) for q in unserviced)
            if v not in chain_idx:
                nxt = spec.chain[attach[v]]
            else:
                d = chain_idx[v]
                if needed > d:
                    nxt = spec.chain[d + 1]
                elif needed < d:
                    nxt = spec.chain[d - 1]
                else:
                    raise ScheduleError(
                        f"cascade {j + 1}: stuck at chain depth {d}")
            if nxt in visited:
                raise ScheduleError(
                    f"cascade {j + 1}: walk would revisit position {nxt}")
            visited.add(nxt)
            moved = row[nxt]
            row[v], row[nxt] = moved, row[v]
            if moved is not None:
                pos_of[moved] = v
                unserviced.discard(moved)
            pos_of[j] = nxt
            t_pos = nxt
        rows.append(tuple(row))

    return QftSchedule(n, spec, tuple(rows))


# ---------------------------------------------------------------------------
# schedule file format


def format_schedule(s: QftSchedule) -> str:
    lines = [f"n={s.n} device={s.spec.name}"]
    for row in s.rows:
        lines.append(",".join("-" if q is None else f"q{q + 1}" for q in row))
    return "\n".join(lines) + "\n"


def parse_schedule(text: str, spec: TopologySpec | None = None) -> QftSchedule:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ScheduleError("empty schedule file")
    header = lines[0].replace("=", "= ").replace("=  ", "= ").split()
    fields: dict[str, str] = {}
    key = None
    for tok in header:
        if tok.endswith("="):
            key = tok[:-1]
        elif key is not None:
            fields[key] = tok
            key = None
    if "n" not in fields or "device" not in fields:
        raise ScheduleError("schedule header must carry n= and device=")
    n = int(fields["n"])
    if spec is None:
        spec = builtin(fields["device"])
    rows = []
    for ln in lines[1:]:
        cells: list[int | None] = []
        for tok in ln.split(","):
            tok = tok.strip()
            if tok == "-":
                cells.append(None)
            elif tok.startswith("q"):
                cells.append(int(tok[1:]) - 1)
            else:
                cells.append(int(tok))
        rows.append(tuple(cells))
    return QftSchedule(n, spec, tuple(rows))
