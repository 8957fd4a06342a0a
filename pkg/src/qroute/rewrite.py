"""Exact, unit-verified rewrite rules used by both routers.

Conventions (fixed here because mixing them is the classic bug):
rz(t) = diag(e^{-it/2}, e^{it/2}), crz(t) = I (+) rz(t), cp(t) =
diag(1,1,1,e^{it}). The controlled-rotation equality holds for crz up to a
global phase with these definitions; the cp fusion needs the extra rz on the
control wire. All emitted rz(0) gates are elided.
"""
from __future__ import annotations

from .circuits import (ANGLE_TOL, Circuit, Gate, GateKind, TAU,
                       canonical_angle, crz)

_CX = GateKind.CX
_RZ = GateKind.RZ
_cx_cache: dict[tuple[int, int], Gate] = {}


def _cx(a: int, b: int) -> Gate:
    # gates are immutable, so identical cx instances are freely shared
    g = _cx_cache.get((a, b))
    if g is None:
        g = _cx_cache[(a, b)] = Gate(_CX, (a, b))
    return g


def _rz_nonzero(wire: int, angle: float) -> list[Gate]:
    a = canonical_angle(angle)
    if a <= ANGLE_TOL or TAU - a <= ANGLE_TOL:
        return []
    return [Gate(_RZ, (wire,), a)]


def decompose_crz(control: int, target: int, theta: float) -> list[Gate]:
    """Controlled-rz as two cx and two rz on the target (2 CNOTs)."""
    return (_rz_nonzero(target, theta / 2)
            + [_cx(control, target)]
            + _rz_nonzero(target, -theta / 2)
            + [_cx(control, target)])


def decompose_swap(a: int, b: int) -> list[Gate]:
    """A swap as three alternating cx gates."""
    return [_cx(a, b), _cx(b, a), _cx(a, b)]


def fuse_crz_swap(control: int, target: int, theta: float) -> list[Gate]:
    """crz followed by a swap of the same pair, with the inner cx pair
    cancelled: 3 CNOTs instead of 5. Afterwards the two wires' logical
    roles are exchanged."""
    return (_rz_nonzero(target, theta / 2)
            + [_cx(control, target)]
            + _rz_nonzero(target, -theta / 2)
            + [_cx(target, control), _cx(control, target)])


def decompose_cp(control: int, target: int, theta: float) -> list[Gate]:
    """Controlled-phase via two cx; needs rz on both wires (2 CNOTs)."""
    return (_rz_nonzero(control, theta / 2)
            + _rz_nonzero(target, theta / 2)
            + [_cx(control, target)]
            + _rz_nonzero(target, -theta / 2)
            + [_cx(control, target)])


def fuse_cp_swap(control: int, target: int, theta: float) -> list[Gate]:
    """cp followed by a swap of the same pair, cx pair cancelled (3 CNOTs)."""
    return (_rz_nonzero(control, theta / 2)
            + _rz_nonzero(target, theta / 2)
            + [_cx(control, target)]
            + _rz_nonzero(target, -theta / 2)
            + [_cx(target, control), _cx(control, target)])


def cancel_cx_pairs(c: Circuit) -> Circuit:
    """Remove adjacent identical cx pairs with nothing touching either wire
    in between; repeats to a fixpoint."""
    gates = list(c.gates)
    while True:
        out: list[Gate | None] = []
        last: dict[int, int] = {}  # wire -> index in `out` of last gate on it
        changed = False
        for g in gates:
            wires = g.wires
            if g.kind is _CX:
                a, b = wires
                ia = last.get(a, -1)
                if ia >= 0 and ia == last.get(b, -2):
                    prev = out[ia]
                    if prev is not None and prev.kind is _CX and prev.wires == wires:
                        out[ia] = None
                        del last[a], last[b]
                        changed = True
                        continue
            idx = len(out)
            for w in wires:
                last[w] = idx
            out.append(g)
        if not changed:
            return c.with_gates(gates)
        gates = [g for g in out if g is not None]


def merge_adjacent_crz(c: Circuit) -> Circuit:
    """Merge consecutive crz gates on the same (control, target) pair into
    one crz with the summed angle; blocked by any intervening gate on either
    wire. The sum is canonicalized modulo 4pi, which is exact for crz."""
    gates = list(c.gates)
    while True:
        out: list[Gate | None] = []
        last: dict[int, int] = {}
        changed = False
        for g in gates:
            wires = g.wires
            if g.kind is GateKind.CRZ:
                a, b = wires
                ia = last.get(a, -1)
                if ia >= 0 and ia == last.get(b, -2):
                    prev = out[ia]
                    if (prev is not None and prev.kind is GateKind.CRZ
                            and prev.wires == wires):
                        out[ia] = crz(a, b, prev.angle + g.angle)
                        changed = True
                        continue
            idx = len(out)
            for w in wires:
                last[w] = idx
            out.append(g)
        if not changed:
            return c.with_gates(gates)
        gates = [g for g in out if g is not None]


def lower_to_hardware(gates) -> list[Gate]:
    """Rewrite a placed gate list into the cx + single-qubit basis.

    crz/cp immediately followed by a swap of the same pair lower through the
    fused 3-CNOT form; lone crz/cp through the 2-CNOT form; lone swaps
    through three cx. Single-qubit gates pass through unchanged.
    """
    gates = list(gates)
    out: list[Gate] = []
    i = 0
    while i < len(gates):
        g = gates[i]
        nxt = gates[i + 1] if i + 1 < len(gates) else None
        fused = (nxt is not None and nxt.kind is GateKind.SWAP
                 and (nxt.wires == g.wires
                      or nxt.wires == (g.wires[1], g.wires[0])))
        if g.kind is GateKind.CRZ:
            if fused:
                out += fuse_crz_swap(g.control, g.target, g.angle)
                i += 2
            else:
                out += decompose_crz(g.control, g.target, g.angle)
                i += 1
        elif g.kind is GateKind.CP:
            if fused:
                out += fuse_cp_swap(g.control, g.target, g.angle)
                i += 2
            else:
                out += decompose_cp(g.control, g.target, g.angle)
                i += 1
        elif g.kind is GateKind.SWAP:
            out += decompose_swap(*g.wires)
            i += 1
        else:
            out.append(g)
            i += 1
    return out
