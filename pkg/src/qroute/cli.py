"""Command-line front end: a thin client over the qroute service.

Without --url the commands run against an in-process instance of the
service app; with --url they talk to a remote server. Exit codes: 0 on
success, 2 on usage errors, 3 on verification or consistency failures.

Env: QROUTE_SEED overrides the default --seed.
"""
from __future__ import annotations

import argparse
import os
import sys

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3


class ServiceClient:
    """POST json, get json; in-process by default."""

    def __init__(self, url: str | None = None):
        if url:
            import httpx
            self._client = httpx.Client(base_url=url)
        else:
            import warnings
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            from .service.app import create_app
            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code >= 400:
            try:
                detail = resp.json().get("detail", resp.text)
            except Exception:
                detail = resp.text
            raise ClientError(str(detail))
        return resp.json()


class ClientError(Exception):
    pass


def _default_seed() -> int:
    return int(os.environ.get("QROUTE_SEED", "0"))


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def cmd_hash_cost(client: ServiceClient, args) -> int:
    payload = {"device": args.device, "l": args.l, "naive": args.naive}
    out = client.post("/hash/cost", payload)
    print(f"device: {out['device']}")
    print(f"l: {out['l']}")
    print(f"total_cnots: {out['total_cnots']}")
    for entry in out["breakdown"]:
        print(f"  {entry['label']}: {entry['cnots']}")
    if out["formula_cnots"] is not None:
        print(f"formula: {out['formula_cnots']}")
        print(f"status: {'MATCH' if out['match'] else 'MISMATCH'}")
    if args.naive:
        print(f"baseline_cnots: {out['baseline_cnots']}")
        print(f"ratio: {_fmt(out['ratio'])}")
    if out["match"] is False:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_hash_sim(client: ServiceClient, args) -> int:
    payload = {"p": args.p, "m": args.m, "l": args.l,
               "seed": args.seed, "budget": args.budget}
    out = client.post("/hash/simulate", payload)
    print(f"p: {out['p']}  m: {out['m']}  l: {out['l']}  seed: {out['seed']}")
    print(f"eps: {_fmt(out['eps'])}")
    print("xi: " + " ".join(_fmt(v) for v in out["xi"]))
    print(f"accept(l={out['l']}): simulated={_fmt(out['accept_simulated'])} "
          f"formula={_fmt(out['accept_formula'])} diff={_fmt(out['diff'])}")
    print(f"accept(l={out['member_l']}, member): "
          f"simulated={_fmt(out['member_accept_simulated'])} "
          f"formula={_fmt(out['member_accept_formula'])}")
    if out["diff"] > 1e-9:
        print("status: DIVERGED")
        return EXIT_VERIFY
    print("status: CONSISTENT")
    return EXIT_OK


def cmd_qft(client: ServiceClient, args) -> int:
    payload = {"device": args.device, "verify": args.verify}
    if args.n is not None:
        payload["n"] = args.n
    if args.topology is not None:
        payload["edge_list"] = _read(args.topology)
        payload["start"] = args.start
    out = client.post("/qft/execute", payload)
    print(f"device: {out['device']}")
    print(f"n: {out['n']}")
    for entry in out["breakdown"]:
        print(f"  {entry['label']}: {entry['cnots']}")
    print(f"total_cnots: {out['total_cnots']}")
    for d in out["diagnostics"]:
        print(f"diagnostic: {d}")
    if args.verify:
        print(f"structural: {out['structural']}")
        print(f"unitary: {out['unitary']}")
        if out["structural"] == "FAIL" or out["unitary"] == "FAIL":
            return EXIT_VERIFY
    return EXIT_OK


def cmd_sweep(client: ServiceClient, args) -> int:
    out = client.post("/hash/sweep", {"device": args.device,
                                      "l_max": args.l_max})
    lines = ["l,optimized,naive,formula"]
    for row in out["rows"]:
        lines.append(f"{row['l']},{row['optimized']},{row['naive']},"
                     f"{row['formula']}")
    text = "\n".join(lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.out} ({len(out['rows'])} rows)")
    return EXIT_OK


def cmd_export(client: ServiceClient, args) -> int:
    payload = {"kind": args.kind, "l": args.l, "p": args.p,
               "seed": args.seed, "logical": args.logical}
    if args.device:
        payload["device"] = args.device
    if args.n is not None:
        payload["n"] = args.n
    if args.m is not None:
        payload["m"] = args.m
    out = client.post("/export/qasm", payload)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out["qasm"])
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.out} (width {out['width']}, "
          f"{out['cnot_count']} cx gates)")
    return EXIT_OK


def cmd_topology_validate(client: ServiceClient, args) -> int:
    payload: dict = {}
    if args.file:
        payload["edge_list"] = _read(args.file)
        if args.derive_start is not None:
            payload["derive_start"] = args.derive_start
    else:
        payload["device"] = args.device
    out = client.post("/topology/validate", payload)
    if out["n"] is not None:
        print(f"n: {out['n']}")
    if out.get("chain"):
        print("chain: " + "-".join(str(p) for p in out["chain"]))
        stationary = ", ".join(f"{c}@{i}" for c, i in out["stationary"])
        print(f"stationary: {stationary if stationary else '(none)'}")
    for v in out["violations"]:
        print(f"violation: {v}")
    print(f"status: {'VALID' if out['valid'] else 'INVALID'}")
    return EXIT_OK if out["valid"] else EXIT_VERIFY


def cmd_angles_search(client: ServiceClient, args) -> int:
    out = client.post("/angles/search", {"p": args.p, "m": args.m,
                                         "budget": args.budget,
                                         "seed": args.seed})
    print(f"p: {out['p']}  m: {out['m']}  budget: {out['budget']}  "
          f"seed: {out['seed']}")
    print("xi: " + " ".join(_fmt(v) for v in out["xi"]))
    print(f"eps: {_fmt(out['eps'])}")
    return EXIT_OK


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qroute",
        description="Topology-aware circuit construction, routing and "
                    "verification")
    parser.add_argument("--url", default=None,
                        help="remote service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hash-cost", help="CNOT cost of the routed hash circuit")
    p.add_argument("device")
    p.add_argument("l", type=int)
    p.add_argument("--naive", action="store_true",
                   help="also run the shortest-path baseline router")
    p.set_defaults(func=cmd_hash_cost)

    p = sub.add_parser("hash-sim", help="search angles and simulate the "
                                        "routed hash circuit on a line")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(func=cmd_hash_sim)

    p = sub.add_parser("qft", help="build and price a routed QFT")
    p.add_argument("device", nargs="?", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--topology", default=None,
                   help="custom edge-list file instead of a device name")
    p.add_argument("--start", type=int, default=0,
                   help="chain start for custom topologies")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_qft)

    p = sub.add_parser("sweep", help="CSV of optimized vs naive hash cost")
    p.add_argument("device")
    p.add_argument("l_max", type=int)
    p.add_argument("out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="emit a circuit as QASM text")
    p.add_argument("kind", choices=["hash-routed", "hash-logical", "qft",
                                    "qft-reference"])
    p.add_argument("out")
    p.add_argument("--device", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--logical", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("topology-validate", help="check a topology fixture "
                                                 "or edge-list file")
    p.add_argument("device", nargs="?", default=None)
    p.add_argument("--file", default=None)
    p.add_argument("--derive-start", type=int, default=None)
    p.set_defaults(func=cmd_topology_validate)

    p = sub.add_parser("angles-search", help="randomized rotation-angle search")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=cmd_angles_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "topology-validate" and not (args.device or args.file):
        parser.error("topology-validate needs a device name or --file")
    try:
        client = ServiceClient(args.url)
        return args.func(client, args)
    except ClientError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
