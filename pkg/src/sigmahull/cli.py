"""Command-line client for the hull/steering/EAQECC service.

Every subcommand builds a request model, dispatches it (in-process by default,
over HTTP when --server is given) and formats the response; no domain logic
lives here.  Exit codes: 0 pass, 1 counterexample or unverified result,
2 parse failure, 3 incompatible inputs, 4 hypothesis violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from . import errors
from .service import handlers
from .service import schemas as sch

_IN_PROCESS = {
    "/hull": (handlers.hull, sch.HullRequest, sch.HullResponse),
    "/dual": (handlers.dual, sch.DualRequest, sch.DualResponse),
    "/mp/build": (handlers.mp_build, sch.MpRequest, sch.MpBuildResponse),
    "/mp/hull": (handlers.mp_hull, sch.MpRequest, sch.MpHullResponse),
    "/mp/check-dc": (handlers.check_dual_containing, sch.MpRequest, sch.CheckResponse),
    "/mp/check-so": (handlers.check_self_orthogonal, sch.MpRequest, sch.CheckResponse),
    "/steer": (handlers.steer, sch.SteerRequest, sch.SteerResponse),
    "/eaqecc": (handlers.eaqecc, sch.EaqeccRequest, sch.EaqeccResponse),
    "/verify": (handlers.run_verify, sch.VerifyRequest, sch.VerifyResponse),
}


class CliFailure(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _dispatch(server: str | None, path: str, request):
    handler, _, response_model = _IN_PROCESS[path]
    if server is None:
        return handler(request)
    import httpx

    reply = httpx.post(
        server.rstrip("/") + path, json=request.model_dump(mode="json"), timeout=600.0
    )
    if reply.status_code == 422:
        raise CliFailure(f"request rejected: {reply.text}", 2)
    if reply.status_code != 200:
        try:
            doc = reply.json()
        except ValueError:
            raise CliFailure(f"server error {reply.status_code}: {reply.text}", 1)
        kind = doc.get("error", "")
        code = next(
            (errors.EXIT_CODES[c] for c in errors.EXIT_CODES if c.__name__ == kind), 1
        )
        raise CliFailure(f"{kind}: {doc.get('message', '')}", code)
    return response_model.model_validate(reply.json())


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliFailure(f"cannot read {path}: {exc}", 2)
    except json.JSONDecodeError as exc:
        raise CliFailure(f"malformed JSON in {path}: {exc}", 2)


def _load_code(path: str) -> sch.CodeModel:
    return sch.CodeModel.model_validate(_load_json(path))


def _load_sigma(path: str) -> sch.SigmaModel:
    return sch.SigmaModel.model_validate(_load_json(path))


def _load_mp_spec(path: str) -> sch.MpSpecModel:
    doc = _load_json(path)
    base = Path(path).parent
    constituents = []
    for item in doc.get("constituents", []):
        if isinstance(item, str):
            constituents.append(_load_json(str(base / item)))
        else:
            constituents.append(item)
    doc["constituents"] = constituents
    return sch.MpSpecModel.model_validate(doc)


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------


def cmd_hull(args) -> int:
    req = sch.HullRequest(code=_load_code(args.code), sigma=_load_sigma(args.sigma))
    res = _dispatch(args.server, "/hull", req)
    print(f"n: {res.n}")
    print(f"k: {res.k}")
    print(f"d: {res.d if res.d is not None else '?'}")
    print(f"hull_dim: {res.hull_dim}")
    basis = res.hull_basis
    print("hull_basis:")
    for i in range(basis.rows):
        row = basis.entries[i * basis.cols:(i + 1) * basis.cols]
        print("  " + " ".join(str(x) for x in row))
    return 0


def cmd_dual(args) -> int:
    req = sch.DualRequest(code=_load_code(args.code), sigma=_load_sigma(args.sigma))
    res = _dispatch(args.server, "/dual", req)
    q = res.code.field.p ** res.code.field.e
    print(f"dual: [{res.n},{res.k},{res.d if res.d is not None else '?'}]_{q}")
    _write_or_print(res.code.model_dump_json(indent=2), args.out)
    return 0


def cmd_mp_build(args) -> int:
    req = sch.MpRequest(spec=_load_mp_spec(args.spec))
    res = _dispatch(args.server, "/mp/build", req)
    print(f"n: {res.n}")
    print(f"k: {res.k}")
    print(f"d: {res.d if res.d is not None else '?'}")
    print(f"claimed_bound: {res.claimed_bound}")
    print(f"nonsingular_by_columns: {str(res.nonsingular_by_columns).lower()}")
    _write_or_print(res.code.model_dump_json(indent=2), args.out)
    return 0


def cmd_mp_hull(args) -> int:
    req = sch.MpRequest(spec=_load_mp_spec(args.spec))
    res = _dispatch(args.server, "/mp/hull", req)
    print(f"hull_dim: {res.hull_dim}")
    print(f"terms: {' '.join(str(t) for t in res.terms)}")
    print(f"rho: {' '.join(str(r) for r in res.rho)}")
    print(f"alphas: {' '.join(str(a) for a in res.alphas)}")
    return 0


def _cmd_check(args, path: str, label: str) -> int:
    req = sch.MpRequest(spec=_load_mp_spec(args.spec))
    res = _dispatch(args.server, path, req)
    print(f"{label}: {str(res.result).lower()}")
    return 0


def cmd_steer(args) -> int:
    req = sch.SteerRequest(
        code=_load_code(args.code),
        sigma=_load_sigma(args.sigma),
        target_h=args.target_h,
        code2=_load_code(args.c2) if args.c2 else None,
        budget=args.budget,
        seed=args.seed,
        exhaustive=True if args.exhaustive else None,
    )
    res = _dispatch(args.server, "/steer", req)
    print(f"achieved_h: {res.achieved_h}")
    print(f"trials: {res.trials}")
    print(f"exhaustive: {str(res.exhaustive).lower()}")
    print("witness: " + res.witness.model_dump_json())
    if args.out:
        Path(args.out).write_text(res.code.model_dump_json(indent=2))
    return 0


def cmd_eaqecc(args) -> int:
    kwargs = {"source": args.source, "budget": args.budget, "seed": args.seed}
    if args.code:
        kwargs["code"] = _load_code(args.code)
    if args.code2:
        kwargs["code2"] = _load_code(args.code2)
    if args.sigma:
        kwargs["sigma"] = _load_sigma(args.sigma)
    if args.spec:
        kwargs["spec"] = _load_mp_spec(args.spec)
    res = _dispatch(args.server, "/eaqecc", sch.EaqeccRequest(**kwargs))
    rows = [r.model_dump() for r in res.records]
    if args.out == "json":
        text = json.dumps({"records": rows, "meta": res.meta}, indent=2)
        _write_or_print(text, args.out_file)
    else:
        columns = ["q", "n", "k", "d", "d_flag", "c", "h", "provenance", "status"]
        if args.out_file:
            fh = open(args.out_file, "w", newline="")
        else:
            fh = sys.stdout
        writer = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        if args.out_file:
            fh.close()
    return 0


def cmd_verify(args) -> int:
    fields = [int(x) for x in args.fields.split(",")] if args.fields else [3, 4, 5, 7, 8, 9]
    req = sch.VerifyRequest(
        suite=args.suite,
        seed=args.seed,
        trials=args.trials,
        max_n=args.max_n,
        fields=fields,
    )
    res = _dispatch(args.server, "/verify", req)
    sys.stdout.write(res.text)
    if res.failures:
        cert_path = args.certificate or f"{args.suite}_counterexamples.json"
        Path(cert_path).write_text(json.dumps(res.counterexamples, indent=2))
        print(f"counterexamples written to {cert_path}", file=sys.stderr)
        return 1
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmahull",
        description="Hulls of linear and matrix-product codes; EAQECC parameter tables.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="hull dimension and basis of a code under an isometry")
    p.add_argument("code")
    p.add_argument("sigma")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("dual", help="sigma dual of a code")
    p.add_argument("code")
    p.add_argument("sigma")
    p.add_argument("--out", help="write the dual code JSON here instead of stdout")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("mp-build", help="assemble a matrix-product code")
    p.add_argument("spec")
    p.add_argument("--out", help="write the assembled code JSON here instead of stdout")
    p.set_defaults(func=cmd_mp_build)

    p = sub.add_parser("mp-hull", help="hull dimension of a matrix-product code")
    p.add_argument("spec")
    p.set_defaults(func=cmd_mp_hull)

    p = sub.add_parser("check-dc", help="is the matrix-product code sigma dual-containing")
    p.add_argument("spec")
    p.set_defaults(func=lambda a: _cmd_check(a, "/mp/check-dc", "dual_containing"))

    p = sub.add_parser("check-so", help="is the matrix-product code sigma self-orthogonal")
    p.add_argument("spec")
    p.set_defaults(func=lambda a: _cmd_check(a, "/mp/check-so", "self_orthogonal"))

    p = sub.add_parser("steer", help="find a monomially equivalent code with a target hull")
    p.add_argument("code")
    p.add_argument("sigma")
    p.add_argument("--target-h", type=int, required=True)
    p.add_argument("--c2", help="second code for relative-hull steering")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out", help="write the steered code JSON here")
    p.set_defaults(func=cmd_steer)

    p = sub.add_parser("eaqecc", help="derive EAQECC parameter tables")
    p.add_argument("--from", dest="source", required=True,
                   choices=["pair", "hull", "family", "mds", "mp"])
    p.add_argument("--code")
    p.add_argument("--code2")
    p.add_argument("--sigma")
    p.add_argument("--spec")
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.add_argument("--out-file")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_eaqecc)

    p = sub.add_parser("verify", help="run a verification campaign against the oracle")
    p.add_argument("suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--fields", help="comma-separated field orders, e.g. 3,4,5")
    p.add_argument("--certificate", help="path for the counterexample certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    except errors.SigmaHullError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return errors.exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
