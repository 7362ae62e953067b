"""Command-line front end.

Four subcommands with a stable contract: exit 0 on success, 1 on usage,
IO, or parse problems, 2 on domain rejections (inadmissible pairs), so
batch scripts can tell malformed input from out-of-regime input.

* ``certify P Q [--format json|text]``   parity certificate for one pair
* ``enumerate --max N [--format csv|json] [--out PATH]``  record table
* ``hilbert A B V``                      one Hilbert symbol (V prime or inf)
* ``graph-check PATH [--frobenius W]``   validate a graph file and report
                                         the local-point criterion

JSON and CSV speak the fixed record schema below; the CSV column order is
frozen and list-valued cells join their items with semicolons.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, fields

from .mumford_graph import GraphParseError, has_local_point, parse_graph, validate
from .ntheory import INFINITY, Place, hilbert_symbol, is_prime
from .parity import (
    HyperellipticFlag,
    ParityCertificate,
    SieveReport,
    certify,
    enumerate_admissible,
    hyperelliptic_sieve,
)
from .shimura import AdmissibilityRejection

__all__ = ["OutputRecord", "build_parser", "main", "entrypoint"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2


@dataclass(frozen=True)
class OutputRecord:
    """One certified pair in wire form; field order is the CSV order."""

    p: int
    q: int
    disc: int
    g_VB: int
    e_p: int
    g_quotient: int
    deficient_places: list[str]
    verdict: str
    hyperelliptic_flag: str
    assumptions: list[str]

    @classmethod
    def from_certificate(cls, cert: ParityCertificate, sieve: SieveReport) -> "OutputRecord":
        return cls(
            p=cert.pair.p,
            q=cert.pair.q,
            disc=cert.pair.disc,
            g_VB=cert.genus.g_VB,
            e_p=cert.genus.e_p,
            g_quotient=cert.genus.g_quotient,
            deficient_places=[str(v) for v in cert.ledger.deficient_places()],
            verdict=cert.verdict.value,
            hyperelliptic_flag=sieve.flag.value,
            assumptions=list(cert.assumptions),
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    def csv_row(self) -> list[str]:
        row = []
        for f in fields(self):
            value = getattr(self, f.name)
            row.append(";".join(value) if isinstance(value, list) else str(value))
        return row


CSV_HEADER = [f.name for f in fields(OutputRecord)]


def _record_for_pair(cert: ParityCertificate) -> OutputRecord:
    report = hyperelliptic_sieve([cert.pair])[0]
    return OutputRecord.from_certificate(cert, report)


def _certificate_text(cert: ParityCertificate, flag: HyperellipticFlag) -> str:
    lines = [
        f"admissible pair: p={cert.pair.p} q={cert.pair.q} disc={cert.pair.disc}",
        f"covering curve genus: {cert.genus.g_VB}",
        f"involution fixed points: {cert.genus.e_p}",
        f"quotient genus: {cert.genus.g_quotient}",
        "local record:",
    ]
    for status in cert.ledger.entries():
        where = "other finite places" if status.place is None else f"place {status.place}"
        verdict = "deficient" if status.deficient else "has degree-1 class"
        lines.append(f"  {where}: {verdict} [{status.source.value}]")
    places = ", ".join(str(v) for v in cert.ledger.deficient_places()) or "none"
    lines.append(f"deficient places: {places}")
    lines.append(f"verdict: {cert.verdict.value}")
    lines.append(f"hyperelliptic flag: {flag.value}")
    lines.append("assumptions:")
    lines.extend(f"  - {a}" for a in cert.assumptions)
    return "\n".join(lines)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's exit 2
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alquot", description="local points and jacobian parity "
                     "for Atkin-Lehner quotients of Shimura curves")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cert = sub.add_parser("certify", help="certify the parity verdict for one pair")
    p_cert.add_argument("p", type=int)
    p_cert.add_argument("q", type=int)
    p_cert.add_argument("--format", choices=("json", "text"), default="text")

    p_enum = sub.add_parser("enumerate", help="tabulate all admissible pairs up to a bound")
    p_enum.add_argument("--max", type=int, required=True, dest="bound")
    p_enum.add_argument("--format", choices=("csv", "json"), default="csv")
    p_enum.add_argument("--out", default=None, help="write to a file instead of stdout")

    p_hil = sub.add_parser("hilbert", help="evaluate one Hilbert symbol")
    p_hil.add_argument("a", type=int)
    p_hil.add_argument("b", type=int)
    p_hil.add_argument("v", help="a prime, or 'inf'")

    p_graph = sub.add_parser("graph-check", help="validate a graph file and test the "
                             "local-point criterion")
    p_graph.add_argument("path")
    p_graph.add_argument("--frobenius", choices=("wp", "wq", "wpq"), default="wp")

    return parser


def _cmd_certify(args: argparse.Namespace) -> int:
    result = certify(args.p, args.q)
    if isinstance(result, AdmissibilityRejection):
        if args.format == "json":
            print(json.dumps({"p": result.p, "q": result.q, "rejected": result.reason}, indent=2))
        else:
            print(f"rejected: {result.reason}")
        return EXIT_REJECTED
    record = _record_for_pair(result)
    if args.format == "json":
        print(record.to_json())
    else:
        flag = HyperellipticFlag(record.hyperelliptic_flag)
        print(_certificate_text(result, flag))
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if not 0 < args.bound < 2**15:
        print("error: --max must be a positive integer below 2^15", file=sys.stderr)
        return EXIT_USAGE
    records = []
    for pair in enumerate_admissible(args.bound):
        cert = certify(pair.p, pair.q)
        assert isinstance(cert, ParityCertificate)
        records.append(_record_for_pair(cert))

    if args.format == "json":
        payload = json.dumps([asdict(r) for r in records], indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in records:
            writer.writerow(record.csv_row())
        payload = buffer.getvalue()

    if args.out is None:
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK


def _cmd_hilbert(args: argparse.Namespace) -> int:
    if args.v == "inf":
        place = INFINITY
    else:
        try:
            prime = int(args.v)
        except ValueError:
            print(f"error: place must be a prime or 'inf', got {args.v!r}", file=sys.stderr)
            return EXIT_USAGE
        if not is_prime(prime):
            print(f"error: {prime} is not prime", file=sys.stderr)
            return EXIT_USAGE
        place = Place(prime)
    try:
        value = hilbert_symbol(args.a, args.b, place)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{value:+d}")
    return EXIT_OK


def _cmd_graph_check(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        graph = parse_graph(text)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    violations = validate(graph)
    if violations:
        for violation in violations:
            print(f"violation: {violation}")
    else:
        print("violations: none")
    found, witness = has_local_point(graph, args.frobenius)
    if found:
        print(f"local point: yes, witness {witness}")
    else:
        print("local point: no")
    return EXIT_OK


_HANDLERS = {
    "certify": _cmd_certify,
    "enumerate": _cmd_enumerate,
    "hilbert": _cmd_hilbert,
    "graph-check": _cmd_graph_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return _HANDLERS[args.command](args)


def entrypoint() -> None:
    raise SystemExit(main())
