"""Command-line front end: analyze, decompose, witness, generate, verify, poset."""

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Optional, TextIO

from .abelian import enumerate_abelian, hasse_edges
from .analyzer import (
    ConnectionSet,
    analysis_report,
    decompose,
    parse_connection_set,
    product_type_witness,
)
from .digraph import dot_text, edge_list_text, tower_connection_set
from .errors import CapacityError
from .oracle import MISMATCH, ORACLE_CAPPED, cross_validate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_CAPACITY = 3


@dataclass
class RunConfig:
    command: str
    instance: Optional[ConnectionSet] = None
    n: Optional[int] = None
    prime: Optional[int] = None
    p: Optional[int] = None
    layers: tuple[int, ...] = ()
    batch: Optional[str] = None
    cap: int = 10**6
    vertex_cap: int = 64
    fmt: str = "text"
    strip_loops: bool = False
    strict: bool = False
    seed: Optional[int] = None
    parse_warnings: list[str] = field(default_factory=list)


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for oracle mismatches; usage errors exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_instance(text: str) -> tuple[ConnectionSet, list[str]]:
    caught: list[str] = []
    with warnings.catch_warnings(record=True) as records:
        warnings.simplefilter("always")
        instance = parse_connection_set(text)
    caught.extend(str(r.message) for r in records)
    return instance, caught


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="circulant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_instance=True):
        if with_instance:
            p.add_argument("instance", help='connection set literal, e.g. "n=45;S=0,1,15,30"')
        p.add_argument("--cap", type=int, default=10**6, help="element enumeration cap")
        p.add_argument("--vertex-cap", type=int, default=64, help="digraph size cap for searches")
        p.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text")
        p.add_argument("--strip-loops", action="store_true", help="drop 0 from S before building digraphs")
        p.add_argument("--strict", action="store_true", help="exit 3 on capacity errors")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized suites (reserved)")

    common(sub.add_parser("analyze", help="levels, minimal group, realizable groups"))
    d = sub.add_parser("decompose", help="per-prime valid levels and layers")
    common(d)
    d.add_argument("--prime", type=int, default=None, help="restrict output to one prime")
    common(sub.add_parser("witness", help="product-type tower digraphs as edge lists"))
    g = sub.add_parser("generate", help="emit the circulant connection set of a tower")
    g.add_argument("--p", type=int, required=True, help="prime")
    g.add_argument("--layers", required=True, help="comma-separated layer exponents, outermost first")
    common(g, with_instance=False)
    v = sub.add_parser("verify", help="cross-validate the analyzer against the oracle")
    v.add_argument("instance", nargs="?", default=None, help='connection set literal; omit with --batch')
    v.add_argument("--batch", default=None, help="corpus file, one instance per line, # comments")
    v.add_argument("--cap", type=int, default=10**6)
    v.add_argument("--vertex-cap", type=int, default=64)
    v.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text")
    v.add_argument("--strip-loops", action="store_true")
    v.add_argument("--strict", action="store_true")
    v.add_argument("--seed", type=int, default=None)
    p = sub.add_parser("poset", help="abelian groups of order n with Hasse cover pairs")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--vertex-cap", type=int, default=64)
    p.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    return parser


def config_from_args(args) -> RunConfig:
    config = RunConfig(
        command=args.command,
        cap=getattr(args, "cap", 10**6),
        vertex_cap=getattr(args, "vertex_cap", 64),
        fmt=getattr(args, "fmt", "text"),
        strip_loops=getattr(args, "strip_loops", False),
        strict=getattr(args, "strict", False),
        seed=getattr(args, "seed", None),
    )
    if getattr(args, "instance", None):
        config.instance, config.parse_warnings = _parse_instance(args.instance)
    config.batch = getattr(args, "batch", None)
    config.n = getattr(args, "n", None)
    config.prime = getattr(args, "prime", None)
    if getattr(args, "p", None) is not None:
        config.p = args.p
        config.layers = tuple(int(x) for x in args.layers.split(","))
    return config


def _effective(config: RunConfig) -> ConnectionSet:
    s = config.instance
    return s.without_loops() if config.strip_loops else s


def _run_analyze(config: RunConfig, out: TextIO) -> int:
    report = analysis_report(_effective(config))
    if config.fmt == "json":
        print(_json_dumps(report), file=out)
        return EXIT_OK
    print(f"n = {report['n']}", file=out)
    print(f"S = {{{','.join(map(str, report['S']))}}}", file=out)
    print(f"arithmetic condition gcd(k, phi(k)) = 1: {report['arithmetic_condition']}", file=out)
    for entry in report["per_prime"]:
        print(
            f"p = {entry['p']}^{entry['a']}: valid levels {entry['valid_levels']}, "
            f"layers {entry['layers']}",
            file=out,
        )
    print(f"minimal group: {report['minimal_group']}", file=out)
    print(f"realizable: [{', '.join(report['realizable'])}]", file=out)
    print(f"exact: {report['exact']}", file=out)
    return EXIT_OK


def _run_decompose(config: RunConfig, out: TextIO) -> int:
    decomposition = decompose(_effective(config))
    entries = [
        layers for layers in decomposition.per_prime
        if config.prime is None or layers.p == config.prime
    ]
    if config.prime is not None and not entries:
        print(f"error: {config.prime} does not divide {decomposition.n}", file=sys.stderr)
        return EXIT_ERROR
    if config.fmt == "json":
        payload = {
            "n": decomposition.n,
            "per_prime": [
                {
                    "p": e.p,
                    "a": e.a,
                    "valid_levels": list(e.valid_levels),
                    "layers": list(e.layer_sizes),
                }
                for e in entries
            ],
        }
        print(_json_dumps(payload), file=out)
        return EXIT_OK
    for e in entries:
        print(f"p = {e.p}^{e.a}: valid levels {list(e.valid_levels)}, layers {list(e.layer_sizes)}", file=out)
    return EXIT_OK


def _run_witness(config: RunConfig, out: TextIO) -> int:
    s = _effective(config)
    towers = product_type_witness(s)
    primes = [layers.p for layers in decompose(s).per_prime]
    for p, tower in zip(primes, towers):
        if config.fmt == "dot":
            print(dot_text(tower, name=f"tower_p{p}"), file=out)
        else:
            print(f"# p={p}", file=out)
            print(edge_list_text(tower), file=out)
    return EXIT_OK


def _run_generate(config: RunConfig, out: TextIO) -> int:
    n, members = tower_connection_set(config.p, config.layers)
    s = ConnectionSet(n, members)
    if config.fmt == "json":
        print(_json_dumps({"n": n, "S": sorted(members)}), file=out)
    else:
        print(s.text(), file=out)
    return EXIT_OK


def _verdict_exit(verdicts: list[str], config: RunConfig) -> int:
    if any(v == MISMATCH for v in verdicts):
        return EXIT_MISMATCH
    if config.strict and any(v == ORACLE_CAPPED for v in verdicts):
        return EXIT_CAPACITY
    return EXIT_OK


def _report_line(report, fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(report.to_json_dict())
    actual = "-" if report.actual is None else f"[{', '.join(g.text() for g in report.actual)}]"
    predicted = f"[{', '.join(g.text() for g in report.predicted)}]"
    return f"n={report.n} S={list(report.s)} predicted={predicted} actual={actual} verdict={report.verdict}"


def _run_verify(config: RunConfig, out: TextIO) -> int:
    if (config.instance is None) == (config.batch is None):
        print("error: verify needs exactly one of an instance literal or --batch", file=sys.stderr)
        return EXIT_ERROR
    instances = []
    if config.batch is not None:
        try:
            with open(config.batch, encoding="utf-8") as handle:
                lines = handle.readlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        for lineno, line in enumerate(lines, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                instance, warns = _parse_instance(stripped)
            except ValueError as exc:
                print(f"error: {config.batch}:{lineno}: {exc}", file=sys.stderr)
                return EXIT_ERROR
            for w in warns:
                print(f"warning: {config.batch}:{lineno}: {w}", file=sys.stderr)
            instances.append(instance)
    else:
        instances.append(_effective(config))
    verdicts = []
    for instance in instances:
        effective = instance.without_loops() if config.strip_loops else instance
        report = cross_validate(effective, cap=config.cap, vertex_cap=config.vertex_cap)
        verdicts.append(report.verdict)
        print(_report_line(report, config.fmt), file=out)
    return _verdict_exit(verdicts, config)


def _run_poset(config: RunConfig, out: TextIO) -> int:
    groups = enumerate_abelian(config.n)
    edges = hasse_edges(config.n) if config.n >= 2 else []
    if config.fmt == "json":
        payload = {
            "n": config.n,
            "groups": [g.text() for g in groups],
            "cover_pairs": [[a.text(), b.text()] for a, b in edges],
        }
        print(_json_dumps(payload), file=out)
    elif config.fmt == "dot":
        lines = [f"digraph poset_{config.n} {{"]
        index = {g: i for i, g in enumerate(groups)}
        for g in groups:
            lines.append(f'  g{index[g]} [label="{g.text()}"];')
        for a, b in edges:
            lines.append(f"  g{index[a]} -> g{index[b]};")
        lines.append("}")
        print("\n".join(lines), file=out)
    else:
        print(f"{len(groups)} abelian groups of order {config.n}:", file=out)
        for g in groups:
            print(f"  {g.text()}", file=out)
        print(f"{len(edges)} cover pairs:", file=out)
        for a, b in edges:
            print(f"  {a.text()} < {b.text()}", file=out)
    return EXIT_OK


_COMMANDS = {
    "analyze": _run_analyze,
    "decompose": _run_decompose,
    "witness": _run_witness,
    "generate": _run_generate,
    "verify": _run_verify,
    "poset": _run_poset,
}


def run(config: RunConfig, out: Optional[TextIO] = None) -> int:
    if out is None:
        out = sys.stdout
    for message in config.parse_warnings:
        print(f"warning: {message}", file=sys.stderr)
    try:
        return _COMMANDS[config.command](config, out)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY if config.strict else EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
