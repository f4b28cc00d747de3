"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 parse or usage error, 3 chain not a
boundary, 4 words not related, 5 size guard, 6 invalid instance or solution,
7 the nu lemma check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import cbi, certify, fi, genus, reduce
from .errors import (
    DomainError,
    InvalidInstance,
    NotASolution,
    NotBoundary,
    NotRelated,
    ParseError,
    SizeGuard,
)
from .words import Word, free_reduce, is_boundary, is_related, parse_chain, parse_word

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_NOT_BOUNDARY = 3
EXIT_NOT_RELATED = 4
EXIT_SIZE_GUARD = 5
EXIT_INVALID_INSTANCE = 6
EXIT_NU_VIOLATION = 7

DEFAULT_MAX_LENGTH = 64


class UsageError(Exception):
    pass


class NuViolation(Exception):
    def __init__(self, report):
        super().__init__("nu lemma check failed")
        self.report = report


@dataclass
class RunReport:
    command: str
    inputs: dict
    result: object = None
    certificate: object = None
    elapsedMillis: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "result": self.result}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        out.update(self.extra)
        out["elapsedMillis"] = self.elapsedMillis
        return out


def _workers(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("CLGENUS_THREADS")
    return max(1, int(env)) if env else 1


def _guard(length: int, args, what: str):
    if length > args.max_length:
        raise SizeGuard(f"{what} has length {length}, above --max-length {args.max_length}")


def cmd_cl(args) -> RunReport:
    chain = parse_chain(args.chain)
    if not is_boundary(chain):
        raise NotBoundary(f"{chain} is not in the commutator subgroup")
    _guard(chain.total_length, args, "chain")
    workers = _workers(args)
    report = RunReport("cl", {"chain": str(chain)})
    if args.decide is not None:
        report.inputs["decide"] = args.decide
        report.result = genus.cl_at_most(chain, args.decide, workers=workers)
        return report
    cert = genus.cl_chain(chain, workers=workers)
    report.result = cert.genus
    if args.certificate:
        if not genus.verify_certificate(chain, cert.pairing, cert.genus):
            raise RuntimeError("pairing certificate failed verification")
        report.certificate = {"pairing": cert.to_json()}
    if args.factorize:
        if len(chain.terms) > 1:
            raise UsageError("--factorize needs a single-word chain")
        w = parse_word(args.chain.strip())
        fac = fi.factorize(w)
        if fac.product() != free_reduce(w) or len(fac) != cert.genus:
            raise RuntimeError("factorization failed verification")
        cert_json = report.certificate or {}
        cert_json["factorization"] = fac.to_json()
        report.certificate = cert_json
    return report


def cmd_cbi(args) -> RunReport:
    v, w = parse_word(args.v), parse_word(args.w)
    _guard(2 * len(v), args, "v + w^-1")
    workers = _workers(args)
    report = RunReport("cbi", {"v": v.text, "w": w.text})
    report.result = cbi.d_cbi(v, w, workers=workers)
    if args.witness:
        seq = cbi.extract_sequence(v, w, workers=workers)
        if not cbi.verify_sequence(v, w, seq) or len(seq) != report.result:
            raise RuntimeError("witness failed verification")
        report.certificate = {"sequence": seq.to_json()}
    if args.oracle:
        d = cbi.oracle_bfs(v, w)
        report.extra["oracle"] = None if d is cbi.EXCEEDED else d
        if d != report.result:
            raise RuntimeError(f"oracle disagrees: {d} != {report.result}")
    if args.lower_bound:
        report.extra["lowerBound"] = certify.nu_lower_bound(v, w)
    return report


def _read_instance(arg: str) -> dict:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read {arg}: {e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInstance(f"instance is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise InvalidInstance("instance must be a JSON object")
    return data


def _pair_from(data: dict) -> tuple[Word, Word | None]:
    if "v" not in data:
        raise InvalidInstance("instance needs a word under key 'v'")
    try:
        v = parse_word(str(data["v"]))
        w = parse_word(str(data["w"])) if data.get("w") is not None else None
    except ParseError as e:
        raise InvalidInstance(str(e)) from None
    return v, w


def cmd_reduce(args) -> RunReport:
    data = _read_instance(args.instance)
    report = RunReport("reduce", {"kind": args.kind, "instance": data})
    if args.kind == "three-partition":
        inst = reduce.ThreePartitionInstance.from_json(data)
        out = reduce.encode_3p(inst)
        report.result = out.to_json()
        if inst.solution is not None:
            seq = reduce.decode_3p_solution(inst, inst.solution)
            if not cbi.verify_sequence(out.v, out.w, seq) or len(seq) != out.k:
                raise RuntimeError("decoded witness failed verification")
            report.certificate = {"sequence": seq.to_json()}
    elif args.kind == "ebp":
        chain = reduce.encode_ebp(reduce.EbpInstance.from_json(data))
        report.result = {"chain": str(chain), "k": 0}
    elif args.kind == "binary":
        v, w = _pair_from(data)
        if w is None:
            report.result = {"v": reduce.lambda_encode(v).text}
        else:
            if not is_related(v, w):
                raise NotRelated(f"{v.text!r} and {w.text!r} are not related")
            report.result = {"v": reduce.lambda_encode(v).text, "w": reduce.lambda_encode(w).text}
    elif args.kind == "single-cl":
        v, w = _pair_from(data)
        if w is None:
            raise InvalidInstance("single-cl needs both 'v' and 'w'")
        words = reduce.cbi_to_cl_single(v, w)
        report.result = {"words": [u.text for u in words]}
        if args.solve:
            _guard(2 * len(v), args, "v w^-1")
            report.extra["minCl"] = reduce.single_word_distance(v, w, workers=_workers(args))
    return report


def cmd_verify_nu_lemma(args) -> RunReport:
    weights = certify.NU_WEIGHTS
    if args.weights:
        raw = _read_instance(args.weights)
        try:
            weights = {str(k): int(v) for k, v in raw.items()}
        except (TypeError, ValueError) as e:
            raise UsageError(f"bad weight table: {e}") from None
    rep = certify.exhaustive_delta_check(weights)
    report = RunReport("verify-nu-lemma", {"weights": dict(sorted(weights.items()))}, rep.to_json())
    if not rep.ok:
        raise NuViolation(report)
    return report


def cmd_oracle_cbi(args) -> RunReport:
    v, w = parse_word(args.v), parse_word(args.w)
    d = cbi.oracle_bfs(v, w, cap=args.cap)
    return RunReport("oracle-cbi", {"v": v.text, "w": w.text}, None if d is cbi.EXCEEDED else d,
                     extra={"exceeded": d is cbi.EXCEEDED})


def _human(report: RunReport) -> str:
    r = report.result
    if report.command == "verify-nu-lemma":
        return json.dumps(r, sort_keys=True)
    if isinstance(r, bool):
        lines = ["yes" if r else "no"]
    elif r is None and report.extra.get("exceeded"):
        lines = ["exceeded"]
    elif isinstance(r, dict):
        lines = [f"{k}: {v}" for k, v in r.items()]
    else:
        lines = [str(r)]
    for k, v in report.extra.items():
        if k != "exceeded":
            lines.append(f"{k}: {v}")
    if report.certificate:
        lines.append("certificate: " + json.dumps(report.certificate))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clgenus", description="Commutator length and block-interchange distance")
    p.add_argument("--json", action="store_true", help="print a machine-readable report")
    p.add_argument("--threads", type=int, default=None, help="search workers (default: $CLGENUS_THREADS or 1)")
    p.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH,
                   help="refuse exact searches on longer inputs (default: %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cl", help="commutator length of a chain such as 'abAB + ab + BA'")
    c.add_argument("chain")
    c.add_argument("--certificate", action="store_true", help="emit the optimal pairing")
    c.add_argument("--factorize", action="store_true", help="emit a product of commutators")
    c.add_argument("--decide", type=int, metavar="K", help="only decide cl <= K")
    c.set_defaults(func=cmd_cl)

    b = sub.add_parser("cbi", help="cyclic block-interchange distance")
    b.add_argument("v")
    b.add_argument("w")
    b.add_argument("--witness", action="store_true", help="emit an optimal move sequence")
    b.add_argument("--oracle", action="store_true", help="cross-check by breadth-first search")
    b.add_argument("--lower-bound", action="store_true", help="the nu lower bound (letters a-d only)")
    b.set_defaults(func=cmd_cbi)

    r = sub.add_parser("reduce", help="run a reduction on a JSON instance")
    r.add_argument("kind", choices=["three-partition", "ebp", "binary", "single-cl"])
    r.add_argument("instance", help="JSON file, inline JSON object, or - for stdin")
    r.add_argument("--solve", action="store_true", help="single-cl: also minimise cl over the words")
    r.set_defaults(func=cmd_reduce)

    n = sub.add_parser("verify-nu-lemma", help="exhaustive check of the per-move nu bound")
    n.add_argument("--weights", help="alternative weight table as JSON (for negative controls)")
    n.set_defaults(func=cmd_verify_nu_lemma)

    o = sub.add_parser("oracle-cbi", help="distance by breadth-first search (short words only)")
    o.add_argument("v")
    o.add_argument("w")
    o.add_argument("--cap", type=int, default=None)
    o.set_defaults(func=cmd_oracle_cbi)
    return p


def _emit(report: RunReport, as_json: bool, stream):
    if as_json:
        print(json.dumps(report.to_json(), sort_keys=True), file=stream)
    else:
        print(_human(report), file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    start = time.perf_counter()
    try:
        report = args.func(args)
    except NuViolation as e:
        e.report.elapsedMillis = int((time.perf_counter() - start) * 1000)
        _emit(e.report, args.json, sys.stdout)
        return EXIT_NU_VIOLATION
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except NotBoundary as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_BOUNDARY
    except (NotRelated, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_RELATED
    except SizeGuard as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (InvalidInstance, NotASolution) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INSTANCE
    report.elapsedMillis = int((time.perf_counter() - start) * 1000)
    _emit(report, args.json, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
