"""Gate and circuit primitives: the substrate for building, rewriting and counting.

A circuit is an immutable, ordered gate list over integer wires. Two-qubit
controlled gates store (control, target) wire order. Rotation angles are kept
canonical: [0, 2pi) for rz/ry/cp, [0, 4pi) for crz. The wider crz window is
load-bearing: crz(theta) and crz(theta - 2pi) differ by a conditional sign on
the control (not a global phase), so folding crz angles mod 2pi would corrupt
gate merging and inversion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

TAU = 2.0 * math.pi
ANGLE_TOL = 1e-12

LOGICAL = "logical"
PHYSICAL = "physical"


class GateKind(Enum):
    H = "h"
    X = "x"
    SX = "sx"
    SXDG = "sxdg"
    S = "s"
    RZ = "rz"
    RY = "ry"
    CX = "cx"
    CRZ = "crz"
    CP = "cp"
    SWAP = "swap"

    @property
    def n_wires(self) -> int:
        return 2 if self in _TWO_WIRE else 1

    @property
    def has_angle(self) -> bool:
        return self in _ANGLED

    @property
    def angle_period(self) -> float:
        # crz is only 4pi-periodic as a unitary; everything else repeats at
        # 2pi exactly (cp) or up to global phase (rz, ry).
        return 2 * TAU if self is GateKind.CRZ else TAU


_TWO_WIRE = {GateKind.CX, GateKind.CRZ, GateKind.CP, GateKind.SWAP}
_ANGLED = {GateKind.RZ, GateKind.RY, GateKind.CRZ, GateKind.CP}
# Physical circuits may only contain these kinds (the routed hardware basis).
HARDWARE_KINDS = {GateKind.H, GateKind.X, GateKind.SX, GateKind.SXDG,
                  GateKind.S, GateKind.RZ, GateKind.CX}


def canonical_angle(value: float, period: float = TAU) -> float:
    """Map an angle into [0, period)."""
    v = math.fmod(value, period)
    if v < 0.0:
        v += period
    if v >= period:  # guard the fmod edge case at exactly period
        v -= period
    return v


def angles_close(a: float, b: float, tol: float = ANGLE_TOL,
                 period: float = TAU) -> bool:
    """Wrap-aware angle comparison: 0 and period - 1e-15 are equal."""
    d = abs(canonical_angle(a, period) - canonical_angle(b, period))
    return min(d, period - d) <= tol


@dataclass(frozen=True, slots=True)
class Gate:
    kind: GateKind
    wires: tuple[int, ...]
    angle: float | None = None

    @property
    def control(self) -> int:
        return self.wires[0]

    @property
    def target(self) -> int:
        return self.wires[-1]

    def same_as(self, other: Gate, tol: float = ANGLE_TOL) -> bool:
        if self.kind is not other.kind or self.wires != other.wires:
            return False
        if self.angle is None:
            return other.angle is None
        return other.angle is not None and angles_close(
            self.angle, other.angle, tol, self.kind.angle_period)


def _gate(kind: GateKind, wires: tuple[int, ...], angle: float | None = None) -> Gate:
    if len(wires) == 2 and wires[0] == wires[1]:
        raise ValueError(f"{kind.value} wires must be distinct, got {wires}")
    if angle is not None:
        angle = canonical_angle(angle, kind.angle_period)
    return Gate(kind, wires, angle)


def h(q: int) -> Gate:
    return _gate(GateKind.H, (q,))


def x(q: int) -> Gate:
    return _gate(GateKind.X, (q,))


def sx(q: int) -> Gate:
    return _gate(GateKind.SX, (q,))


def sxdg(q: int) -> Gate:
    return _gate(GateKind.SXDG, (q,))


def s(q: int) -> Gate:
    return _gate(GateKind.S, (q,))


def rz(q: int, angle: float) -> Gate:
    return _gate(GateKind.RZ, (q,), angle)


def ry(q: int, angle: float) -> Gate:
    return _gate(GateKind.RY, (q,), angle)


def cx(control: int, target: int) -> Gate:
    return _gate(GateKind.CX, (control, target))


def crz(control: int, target: int, angle: float) -> Gate:
    return _gate(GateKind.CRZ, (control, target), angle)


def cp(control: int, target: int, angle: float) -> Gate:
    return _gate(GateKind.CP, (control, target), angle)


def swap(a: int, b: int) -> Gate:
    return _gate(GateKind.SWAP, (a, b))


@dataclass(frozen=True)
class Layout:
    """Wire bookkeeping produced by the routers.

    initial/final map logical wire -> physical wire; perm maps a physical
    start wire to the physical wire its qubit occupies after all swaps.
    """
    initial: tuple[int, ...]
    final: tuple[int, ...]
    perm: tuple[int, ...]


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...] = ()
    space: str = LOGICAL
    layout: Layout | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))

    def with_gates(self, gates) -> Circuit:
        return replace(self, gates=tuple(gates))


def cnot_count(c: Circuit) -> int:
    """Number of cx gates; undecomposed crz/cp/swap contribute nothing."""
    return sum(1 for g in c.gates if g.kind is GateKind.CX)


def compose(a: Circuit, b: Circuit) -> Circuit:
    if a.width != b.width:
        raise ValueError(f"cannot compose widths {a.width} and {b.width}")
    space = LOGICAL if LOGICAL in (a.space, b.space) else PHYSICAL
    return Circuit(a.width, a.gates + b.gates, space)


_SELF_INVERSE = {GateKind.H, GateKind.X, GateKind.CX, GateKind.SWAP}


def inverse_gate(g: Gate) -> Gate:
    if g.kind in _SELF_INVERSE:
        return g
    if g.kind is GateKind.SX:
        return Gate(GateKind.SXDG, g.wires)
    if g.kind is GateKind.SXDG:
        return Gate(GateKind.SX, g.wires)
    if g.kind is GateKind.S:
        # s-dagger is not a kind of its own; rz(3pi/2) matches it up to a
        # global phase, which is all the simulator-level contracts require.
        return Gate(GateKind.RZ, g.wires, canonical_angle(-math.pi / 2))
    return Gate(g.kind, g.wires,
                canonical_angle(-g.angle, g.kind.angle_period))


def inverse(c: Circuit) -> Circuit:
    """Reversed gate list with each gate inverted (exact up to global phase)."""
    return c.with_gates(inverse_gate(g) for g in reversed(c.gates))


def relabel(c: Circuit, mapping: dict[int, int] | list[int],
            width: int | None = None) -> Circuit:
    """Move every gate onto new wires; `mapping[old] = new`."""
    if not isinstance(mapping, dict):
        mapping = {i: w for i, w in enumerate(mapping)}
    new_width = width if width is not None else max(mapping.values()) + 1
    gates = [Gate(g.kind, tuple(mapping[w] for w in g.wires), g.angle)
             for g in c.gates]
    return Circuit(new_width, tuple(gates), c.space)


def validate(c: Circuit, coupling=None) -> list[str]:
    """Check every type invariant; violations come back as data, not errors.

    `coupling` is any object with `has_edge(u, v)`; when given and the
    circuit is physical, every cx must sit on a graph edge.
    """
    problems: list[str] = []
    for i, g in enumerate(c.gates):
        if len(set(g.wires)) != len(g.wires):
            problems.append(f"gate {i} ({g.kind.value}): duplicate wires {g.wires}")
        if len(g.wires) != g.kind.n_wires:
            problems.append(f"gate {i} ({g.kind.value}): expected "
                            f"{g.kind.n_wires} wires, got {len(g.wires)}")
        for w in g.wires:
            if not 0 <= w < c.width:
                problems.append(f"gate {i} ({g.kind.value}): wire {w} out of "
                                f"range for width {c.width}")
        if g.kind.has_angle and g.angle is None:
            problems.append(f"gate {i} ({g.kind.value}): missing angle")
        if c.space == PHYSICAL:
            if g.kind not in HARDWARE_KINDS:
                problems.append(f"gate {i}: {g.kind.value} not allowed in a "
                                f"physical circuit")
            elif g.kind is GateKind.CX and coupling is not None:
                u, v = g.wires
                if not coupling.has_edge(u, v):
                    problems.append(f"gate {i}: cx({u},{v}) is not a coupling"
                                    f" edge")
    return problems
