"""Command line front end.

Thin shell over the library: every subcommand parses arguments, calls the
same functions the service and tests use, and prints.  Exit codes: 0 on
success, 1 when a verification finds an inequality, 2 for usage problems.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cumulants import FLAVORS, Sequence, gaussian, poisson, transform
from .identities import block_count_polynomial, run_identity_checks
from .partitions import FAMILY_KINDS, PAIRING_KINDS, enumerate_partitions
from .rings import LAMBDA, parse_rational, scalar_str, scalar_to_json

MAX_TRANSFORM_ORDER = 16
MAX_COUNT = 13
MAX_COUNT_PAIRING = 14
MAX_BLOCKPOLY = 10
MAX_VERIFY = 9


@dataclass
class DistributionSpec:
    """What to transform: a named law, or explicit moment-style values."""

    name: str
    rate: str | None = None          # poisson rate text: rational or "lambda"
    moments_path: str | None = None  # custom: JSON array of rational strings
    inline_values: tuple | None = None  # custom: values passed directly

    @classmethod
    def from_arg(cls, text: str) -> "DistributionSpec":
        name, _, tail = str(text).partition(":")
        name = name.strip().lower()
        if name == "gaussian":
            if tail:
                raise ValueError("gaussian takes no parameter")
            return cls("gaussian")
        if name == "poisson":
            if not tail:
                raise ValueError("poisson needs a rate, e.g. poisson:1 or poisson:lambda")
            return cls("poisson", rate=tail)
        if name == "custom":
            if not tail:
                raise ValueError("custom needs a values file, e.g. custom:moments.json")
            return cls("custom", moments_path=tail)
        raise ValueError(f"unknown distribution {name!r}")


def sequence_from_spec(spec: DistributionSpec, from_flavor: str, order: int) -> Sequence:
    """Build the starting sequence for a transform request."""
    if from_flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {from_flavor!r}")
    if spec.name == "gaussian":
        if from_flavor != "classical":
            raise ValueError("gaussian is specified by its classical cumulants; use classical as the source flavor")
        return gaussian(order)
    if spec.name == "poisson":
        if from_flavor != "classical":
            raise ValueError("poisson is specified by its classical cumulants; use classical as the source flavor")
        if spec.rate is None:
            raise ValueError("poisson needs a rate")
        text = spec.rate.strip().lower()
        rate = LAMBDA if text in ("lambda", "λ") else parse_rational(spec.rate)
        return poisson(rate, order)
    if spec.name == "custom":
        if spec.inline_values is not None:
            raw = list(spec.inline_values)
        elif spec.moments_path:
            with open(spec.moments_path, encoding="utf-8") as fh:
                raw = json.load(fh)
            if not isinstance(raw, list):
                raise ValueError("custom values file must hold a JSON array of rational strings")
        else:
            raise ValueError("custom needs a values file or inline values")
        if len(raw) < order:
            raise ValueError(f"need {order} values, file has {len(raw)}")
        vals = tuple(parse_rational(v) for v in raw[:order])
        return Sequence(from_flavor, vals)
    raise ValueError(f"unknown distribution {spec.name!r}")


def _dump(obj) -> str:
    # canonical bytes: sorted keys, no incidental whitespace
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cumulattice",
        description="Exact moment-cumulant transforms and set-partition counting.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="transform a distribution between sequence flavors")
    t.add_argument(
        "--dist",
        required=True,
        metavar="NAME[:RATE]",
        help="gaussian | poisson:RATE (rational or 'lambda') | custom:FILE.json",
    )
    t.add_argument("--from", dest="from_flavor", required=True, choices=FLAVORS,
                   help="flavor the source values are given in")
    t.add_argument("--to", dest="to_flavor", required=True, choices=FLAVORS)
    t.add_argument("--order", type=int, required=True, metavar="N",
                   help=f"number of values, 1..{MAX_TRANSFORM_ORDER}")
    t.add_argument("--json", action="store_true")

    c = sub.add_parser("count", help="count family members for n = 1..max")
    c.add_argument("kind", choices=FAMILY_KINDS)
    c.add_argument("--max", type=int, required=True, metavar="N")
    c.add_argument("--json", action="store_true")

    b = sub.add_parser("blockpoly", help="block-count polynomials over connected partitions")
    b.add_argument("--max", type=int, required=True, metavar="N",
                   help=f"largest ground set, 1..{MAX_BLOCKPOLY}")
    b.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run the weighted-sum identity checks on random inputs")
    v.add_argument("--max-n", dest="max_n", type=int, required=True, metavar="N",
                   help=f"check all orders up to N, 1..{MAX_VERIFY}")
    v.add_argument("--trials", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")  # report is always JSON
    v.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    return p


def _cmd_transform(args, parser) -> int:
    if not 1 <= args.order <= MAX_TRANSFORM_ORDER:
        parser.error(f"--order must be in 1..{MAX_TRANSFORM_ORDER}")
    try:
        spec = DistributionSpec.from_arg(args.dist)
        seq = sequence_from_spec(spec, args.from_flavor, args.order)
        out = transform(seq, args.to_flavor)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"cumulattice: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(_dump({
            "dist": args.dist,
            "from": args.from_flavor,
            "to": args.to_flavor,
            "order": args.order,
            "values": out.to_json(),
        }))
    else:
        print(",".join(scalar_str(v) for v in out.values))
    return 0


def _cmd_count(args, parser) -> int:
    limit = MAX_COUNT_PAIRING if args.kind in PAIRING_KINDS else MAX_COUNT
    if not 1 <= args.max <= limit:
        parser.error(
            f"--max for {args.kind} is capped at {limit}; family sizes grow "
            "like Bell numbers and exhaustive enumeration stops being exact-friendly"
        )
    ns = range(2, args.max + 1, 2) if args.kind in PAIRING_KINDS else range(1, args.max + 1)
    rows = [(n, sum(1 for _ in enumerate_partitions(n, args.kind))) for n in ns]
    if args.json:
        print(_dump({
            "kind": args.kind,
            "max": args.max,
            "rows": [{"n": n, "count": c} for n, c in rows],
        }))
    else:
        for n, c in rows:
            print(f"{n}\t{c}")
    return 0


def _cmd_blockpoly(args, parser) -> int:
    if not 1 <= args.max <= MAX_BLOCKPOLY:
        parser.error(f"--max must be in 1..{MAX_BLOCKPOLY}")
    rows = [(n, block_count_polynomial(n)) for n in range(1, args.max + 1)]
    if args.json:
        print(_dump({
            "max": args.max,
            "rows": [
                {"n": n, "text": scalar_str(poly), "coefficients": scalar_to_json(poly)}
                for n, poly in rows
            ],
        }))
    else:
        for n, poly in rows:
            print(f"{n}\t{poly}")
    return 0


def _cmd_verify(args, parser) -> int:
    if not 1 <= args.max_n <= MAX_VERIFY:
        parser.error(f"--max-n must be in 1..{MAX_VERIFY}")
    if args.trials < 1:
        parser.error("--trials must be positive")
    checks = run_identity_checks(args.max_n, args.trials, args.seed, tamper=args.tamper)
    ok = all(c["equal"] for c in checks)
    print(_dump({
        "max_n": args.max_n,
        "trials": args.trials,
        "seed": args.seed,
        "all_equal": ok,
        "checks": checks,
    }))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "transform": _cmd_transform,
        "count": _cmd_count,
        "blockpoly": _cmd_blockpoly,
        "verify": _cmd_verify,
    }[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
