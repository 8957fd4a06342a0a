"""QASM-2 style text export and the matching parser.

Hardware export covers {h, x, sx, sxdg, s, rz, cx}; logical export adds
{ry, crz, cp, swap}. Angles print with 17 significant digits so a parse
round-trip reproduces the exact float.
"""
from __future__ import annotations

from .circuits import (Circuit, Gate, GateKind, HARDWARE_KINDS, LOGICAL,
                       PHYSICAL, canonical_angle)

_LOGICAL_ONLY = {GateKind.RY, GateKind.CRZ, GateKind.CP, GateKind.SWAP}


class QasmError(ValueError):
    pass


def to_qasm(c: Circuit, logical: bool = False) -> str:
    """Emit the circuit as QASM-like text; hardware-basis unless `logical`."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.width}];"]
    for i, g in enumerate(c.gates):
        if not logical and g.kind not in HARDWARE_KINDS:
            raise QasmError(
                f"gate {i}: {g.kind.value} requires logical export")
        name = g.kind.value
        args = ",".join(f"q[{w}]" for w in g.wires)
        if g.kind.has_angle:
            lines.append(f"{name}({g.angle:.17g}) {args};")
        else:
            lines.append(f"{name} {args};")
    return "\n".join(lines) + "\n"


_BY_NAME = {k.value: k for k in GateKind}


def parse_qasm(text: str) -> Circuit:
    width: int | None = None
    gates: list[Gate] = []
    logical = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line:
            continue
        if line.startswith(("OPENQASM", "include")):
            continue
        if not line.endswith(";"):
            raise QasmError(f"line {lineno}: missing ';'")
        line = line[:-1].strip()
        if line.startswith("qreg"):
            if width is not None:
                raise QasmError(f"line {lineno}: second qreg")
            width = int(line[line.index("[") + 1:line.index("]")])
            continue
        if width is None:
            raise QasmError(f"line {lineno}: gate before qreg")
        head, _, args = line.partition(" ")
        angle = None
        if "(" in head:
            name, _, rest = head.partition("(")
            angle = float(rest.rstrip(")"))
        else:
            name = head
        kind = _BY_NAME.get(name)
        if kind is None:
            raise QasmError(f"line {lineno}: unknown gate {name!r}")
        wires = tuple(int(tok.strip()[2:-1]) for tok in args.split(","))
        if len(wires) != kind.n_wires:
            raise QasmError(f"line {lineno}: {name} expects {kind.n_wires} wires")
        if kind.has_angle and angle is None:
            raise QasmError(f"line {lineno}: {name} needs an angle")
        if kind in _LOGICAL_ONLY:
            logical = True
        gates.append(Gate(kind, wires,
                          None if angle is None
                          else canonical_angle(angle, kind.angle_period)))
    if width is None:
        raise QasmError("no qreg declaration")
    return Circuit(width, tuple(gates), LOGICAL if logical else PHYSICAL)
