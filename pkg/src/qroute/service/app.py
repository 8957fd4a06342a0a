"""FastAPI service exposing the circuit builders, routers and verifiers.

Every endpoint is a stateless wrapper over the core package: requests carry
plain parameters, responses carry counts, probabilities, diagnostics, or
QASM text. Run with `uvicorn qroute.service.app:app`.
"""
from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import qasm
from ..circuits import TAU, cnot_count, relabel
from ..hashing import (HashParams, accept_prob, cost_formula,
                       hash_cost_breakdown, logical_hash_circuit,
                       naive_routed_circuit, routed_hash_circuit,
                       search_angles)
from ..qft import (ScheduleError, builtin_schedule, execute_schedule,
                   greedy_schedule, reference_qft, validate_schedule,
                   verify_structural)
from ..simulate import equivalent_up_to_perm_phase, run, unitary_of
from ..topology import (BUILTIN_DEVICES, NoValidSpecError, TopologyParseError,
                        TopologySpec, builtin, derive_chain, load_custom,
                        validate_spec)
from .models import (AnglesRequest, AnglesResponse, BreakdownEntry,
                     ExportRequest, ExportResponse, HashCostRequest,
                     HashCostResponse, HashSimRequest, HashSimResponse,
                     QftRequest, QftResponse, SweepRequest, SweepResponse,
                     SweepRow, TopologyValidateRequest,
                     TopologyValidateResponse)


def _bad_request(msg: str) -> HTTPException:
    return HTTPException(status_code=400, detail=msg)


def _resolve_spec(device: str | None, edge_list: str | None,
                  start: int = 0) -> TopologySpec:
    if edge_list is not None:
        try:
            graph = load_custom(edge_list)
            return derive_chain(graph, start)
        except (TopologyParseError, NoValidSpecError, ValueError) as e:
            raise _bad_request(str(e)) from e
    if device is None:
        raise _bad_request("either device or edge_list is required")
    try:
        return builtin(device)
    except KeyError as e:
        raise _bad_request(str(e)) from e


def _device_angles(p: int, m: int, seed: int) -> tuple[float, ...]:
    # counts are angle-independent; a seeded draw keeps exports reproducible
    rng = np.random.default_rng(seed)
    return tuple(float(v) for v in rng.uniform(0.0, TAU, m))


def create_app() -> FastAPI:
    app = FastAPI(title="qroute",
                  description="Topology-aware circuit construction, routing "
                              "and verification")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "devices": list(BUILTIN_DEVICES)}

    @app.post("/hash/cost", response_model=HashCostResponse)
    def hash_cost(req: HashCostRequest) -> HashCostResponse:
        spec = _resolve_spec(req.device, req.edge_list)
        m = spec.graph.n
        hp = HashParams(5, m, _device_angles(5, m, 0), req.l)
        circuit, _ = routed_hash_circuit(hp, spec)
        total = cnot_count(circuit)
        report = hash_cost_breakdown(hp, spec)
        formula = None
        if req.device in BUILTIN_DEVICES:
            formula = cost_formula(req.device, req.l)
        baseline = ratio = None
        if req.naive:
            baseline = cnot_count(naive_routed_circuit(hp, spec))
            ratio = baseline / total
        return HashCostResponse(
            device=spec.name, l=req.l, total_cnots=total,
            breakdown=[BreakdownEntry(label=lbl, cnots=c)
                       for lbl, c in report.breakdown],
            formula_cnots=formula,
            match=None if formula is None else total == formula,
            baseline_cnots=baseline, ratio=ratio)

    @app.post("/hash/simulate", response_model=HashSimResponse)
    def hash_simulate(req: HashSimRequest) -> HashSimResponse:
        try:
            xi, eps = search_angles(req.p, req.m, req.budget, req.seed)
        except ValueError as e:
            raise _bad_request(str(e)) from e
        from ..topology import lnn
        spec = lnn(req.m) if req.m >= 2 else None
        hp = HashParams(req.p, req.m, xi, req.l)
        routed, layout = routed_hash_circuit(hp, spec)
        sim = float(abs(run(routed)[0]) ** 2)
        formula = accept_prob(hp)
        member_l = req.p * max(1, (req.l + req.p - 1) // req.p)
        hp_member = HashParams(req.p, req.m, xi, member_l)
        routed_m, _ = routed_hash_circuit(hp_member, spec)
        sim_member = float(abs(run(routed_m)[0]) ** 2)
        return HashSimResponse(
            p=req.p, m=req.m, l=req.l, seed=req.seed, budget=req.budget,
            xi=list(xi), eps=eps, accept_simulated=sim,
            accept_formula=formula, diff=abs(sim - formula),
            member_l=member_l, member_accept_simulated=sim_member,
            member_accept_formula=accept_prob(hp_member))

    @app.post("/hash/sweep", response_model=SweepResponse)
    def hash_sweep(req: SweepRequest) -> SweepResponse:
        spec = _resolve_spec(req.device, None)
        m = spec.graph.n
        rows = []
        for l in range(1, req.l_max + 1):
            hp = HashParams(5, m, _device_angles(5, m, 0), l)
            circuit, _ = routed_hash_circuit(hp, spec)
            baseline = cnot_count(naive_routed_circuit(hp, spec))
            formula = (cost_formula(req.device, l)
                       if req.device in BUILTIN_DEVICES else cnot_count(circuit))
            rows.append(SweepRow(l=l, optimized=cnot_count(circuit),
                                 naive=baseline, formula=formula))
        return SweepResponse(device=spec.name, rows=rows)

    @app.post("/qft/execute", response_model=QftResponse)
    def qft_execute(req: QftRequest) -> QftResponse:
        if req.device in BUILTIN_DEVICES and req.n is None:
            schedule = builtin_schedule(req.device)
        else:
            spec = _resolve_spec(req.device, req.edge_list, req.start)
            n = req.n if req.n is not None else spec.graph.n
            if not 1 <= n <= spec.graph.n:
                raise _bad_request(f"n={n} does not fit device {spec.name}")
            schedule = greedy_schedule(n, spec)
        diags = validate_schedule(schedule)
        if diags:
            raise _bad_request("; ".join(diags))
        try:
            ex = execute_schedule(schedule)
        except ScheduleError as e:
            raise _bad_request(str(e)) from e
        structural = unitary = "SKIPPED"
        if req.verify:
            ok, vd = verify_structural(ex.circuit, ex)
            structural = "PASS" if ok else "FAIL"
            diags = list(ex.diagnostics) + vd
            if schedule.spec.graph.n <= 10:
                ref = relabel(reference_qft(schedule.n),
                              list(ex.layout.initial),
                              width=schedule.spec.graph.n)
                unitary = ("PASS" if equivalent_up_to_perm_phase(
                    unitary_of(ref), unitary_of(ex.circuit), ex.layout.perm)
                    else "FAIL")
        else:
            diags = list(ex.diagnostics)
        return QftResponse(
            device=schedule.spec.name, n=schedule.n,
            total_cnots=ex.report.total_cnots,
            breakdown=[BreakdownEntry(label=lbl, cnots=c)
                       for lbl, c in ex.report.breakdown],
            diagnostics=diags, structural=structural, unitary=unitary,
            final_positions=list(ex.layout.final))

    @app.post("/angles/search", response_model=AnglesResponse)
    def angles(req: AnglesRequest) -> AnglesResponse:
        try:
            xi, eps = search_angles(req.p, req.m, req.budget, req.seed)
        except ValueError as e:
            raise _bad_request(str(e)) from e
        return AnglesResponse(p=req.p, m=req.m, seed=req.seed,
                              budget=req.budget, xi=list(xi), eps=eps)

    @app.post("/topology/validate", response_model=TopologyValidateResponse)
    def topology_validate(req: TopologyValidateRequest
                          ) -> TopologyValidateResponse:
        if req.edge_list is not None:
            try:
                graph = load_custom(req.edge_list)
            except TopologyParseError as e:
                return TopologyValidateResponse(valid=False,
                                                violations=[str(e)])
            if req.derive_start is not None:
                try:
                    spec = derive_chain(graph, req.derive_start)
                except NoValidSpecError as e:
                    return TopologyValidateResponse(
                        valid=False, violations=[str(e)], n=graph.n)
                return TopologyValidateResponse(
                    valid=True, violations=[], n=graph.n,
                    chain=list(spec.chain),
                    stationary=[[c, i] for c, i in spec.stationary])
            return TopologyValidateResponse(valid=True, violations=[],
                                            n=graph.n)
        if req.device is None:
            raise _bad_request("either device or edge_list is required")
        try:
            spec = builtin(req.device)
        except KeyError as e:
            raise _bad_request(str(e)) from e
        violations = validate_spec(spec)
        return TopologyValidateResponse(
            valid=not violations, violations=violations, n=spec.graph.n,
            chain=list(spec.chain),
            stationary=[[c, i] for c, i in spec.stationary])

    @app.post("/export/qasm", response_model=ExportResponse)
    def export_qasm(req: ExportRequest) -> ExportResponse:
        if req.kind == "hash-routed":
            spec = _resolve_spec(req.device, None)
            m = spec.graph.n
            hp = HashParams(req.p, m, _device_angles(req.p, m, req.seed), req.l)
            circuit, _ = routed_hash_circuit(hp, spec)
        elif req.kind == "hash-logical":
            if req.m is None:
                raise _bad_request("hash-logical export needs m")
            hp = HashParams(req.p, req.m,
                            _device_angles(req.p, req.m, req.seed), req.l)
            circuit = logical_hash_circuit(hp)
        elif req.kind == "qft":
            if req.device in BUILTIN_DEVICES and req.n is None:
                ex = execute_schedule(builtin_schedule(req.device))
            else:
                spec = _resolve_spec(req.device, None)
                n = req.n if req.n is not None else spec.graph.n
                ex = execute_schedule(greedy_schedule(n, spec))
            circuit = ex.circuit
        elif req.kind == "qft-reference":
            if req.n is None:
                raise _bad_request("qft-reference export needs n")
            circuit = reference_qft(req.n)
        else:
            raise _bad_request(f"unknown export kind {req.kind!r}")
        try:
            text = qasm.to_qasm(circuit, logical=req.logical)
        except qasm.QasmError as e:
            raise _bad_request(str(e)) from e
        return ExportResponse(qasm=text, cnot_count=cnot_count(circuit),
                              width=circuit.width)

    return app


app = create_app()
