"""Command-line interface.

Exit codes: 0 success, 1 validation/computation failure, 2 usage error.
Results go to stdout, diagnostics to stderr.  JSON output is byte-stable
(sorted keys) and serializes big integers as strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characters import BundleSpec, InvalidSpec
from .chern import NonIntegralResult, cp_model, holomorphic_euler
from .contact import validate
from .lefschetz import (
    NonIntegralCoefficient,
    certificate,
    equivariant_index,
    scan,
)
from .models import (
    DegenerateWeights,
    ParseError,
    ValidationFailed,
    cp_twistor,
    load_fixture,
    projectivized_cotangent,
    save_fixture,
)
from .ratfunc import NotPolynomial
from .region import grid_ascii, grid_csv, region_grid


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _laurent_json(lp) -> dict:
    return {str(e): str(int(c)) for e, c in lp.terms()}


def _index_json(idx) -> dict:
    return {
        "laurent": _laurent_json(idx.laurent),
        "classification": idx.classification,
        "value": None if idx.value is None else str(idx.value),
    }


def _spec_from_args(args) -> BundleSpec:
    return BundleSpec(variant=args.variant, p=args.p, k=args.k)


def _weights(text: str) -> tuple:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def cmd_validate(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        from .contact import from_json_dict

        data = from_json_dict(obj)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = validate(data)
    print(
        _dump(
            {
                "name": data.name,
                "valid": report.valid,
                "violations": [
                    {"point": v.point, "code": v.code, "message": v.message}
                    for v in report.violations
                ],
            }
        )
    )
    return 0 if report.valid else 1


def cmd_index(args) -> int:
    data = load_fixture(args.file)
    idx = equivariant_index(data, _spec_from_args(args))
    if args.format == "json":
        print(_dump(_index_json(idx)))
    else:
        print("exponent,coefficient")
        for e, c in idx.laurent.terms():
            print(f"{e},{int(c)}")
        print(f"# classification: {idx.classification}")
    return 0


def cmd_scan(args) -> int:
    data = load_fixture(args.file)
    p_max = args.pmax if args.pmax is not None else 2 * data.n
    rows = scan(
        data,
        range(0, p_max + 1),
        range(args.kmin, args.kmax + 1),
        args.variant,
    )
    print("p,k,classification,value,verdict,error")
    for r in rows:
        print(
            f"{r.p},{r.k},{r.classification or ''},"
            f"{'' if r.value is None else r.value},{r.verdict or ''},"
            f"{r.error or ''}"
        )
    return 0


def cmd_certificate(args) -> int:
    data = load_fixture(args.file)
    cert = certificate(data, _spec_from_args(args))
    payload = {
        "verdict": cert.verdict,
        "bounded_at_0": cert.bounded_at_0,
        "bounded_at_inf": cert.bounded_at_inf,
        "strict_at_0": cert.strict_at_0,
        "strict_at_inf": cert.strict_at_inf,
        "terms": [
            {
                "point": t.point,
                "weight": str(t.weight),
                "ord_at_zero": str(t.ord_at_zero),
                "deg_at_infinity": str(t.deg_at_infinity),
                "bounded_at_0": t.bounded_at_0,
                "bounded_at_inf": t.bounded_at_inf,
            }
            for t in cert.terms
        ],
    }
    print(_dump(payload))
    return 0


def cmd_region(args) -> int:
    cells = region_grid(args.n, args.variant)
    if args.format == "csv":
        sys.stdout.write(grid_csv(cells))
    else:
        sys.stdout.write(grid_ascii(cells))
    return 0


def cmd_model(args) -> int:
    if args.family == "cp-twistor":
        data = cp_twistor(args.weights)
    else:
        data = projectivized_cotangent(args.weights)
    if args.output:
        save_fixture(data, args.output)
    else:
        from .contact import to_json_dict

        print(_dump(to_json_dict(data)))
    return 0


def cmd_oracle(args) -> int:
    model = cp_model(args.n)
    value = holomorphic_euler(model, _spec_from_args(args))
    print(value)
    return 0


def _add_spec_args(sub):
    sub.add_argument("--variant", choices=["ext", "sym"], default="ext")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contactindex",
        description="Exact equivariant Euler characteristics of complex "
        "contact manifolds from circle fixed-point data.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("validate", help="check a fixture against the contact identities")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = subs.add_parser("index", help="equivariant index of one bundle")
    s.add_argument("file")
    _add_spec_args(s)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(fn=cmd_index)

    s = subs.add_parser("scan", help="classify every (p, k) cell")
    s.add_argument("file")
    s.add_argument("--variant", choices=["ext", "sym"], default="ext")
    s.add_argument("--pmax", type=int, default=None)
    s.add_argument("--kmin", type=int, default=-3)
    s.add_argument("--kmax", type=int, default=3)
    s.set_defaults(fn=cmd_scan)

    s = subs.add_parser("certificate", help="per-term limit report")
    s.add_argument("file")
    _add_spec_args(s)
    s.set_defaults(fn=cmd_certificate)

    s = subs.add_parser("region", help="rigidity/vanishing region grid")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--variant", choices=["ext", "sym"], default="ext")
    s.add_argument("--format", choices=["csv", "ascii"], default="ascii")
    s.set_defaults(fn=cmd_region)

    s = subs.add_parser("model", help="generate fixture data")
    s.add_argument("family", choices=["cp-twistor", "cotangent"])
    s.add_argument("--weights", type=_weights, required=True)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(fn=cmd_model)

    s = subs.add_parser("oracle", help="characteristic-class value on CP^(2n+1)")
    s.add_argument("--n", type=int, required=True)
    _add_spec_args(s)
    s.set_defaults(fn=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (
        ParseError,
        ValidationFailed,
        DegenerateWeights,
        InvalidSpec,
        NotPolynomial,
        NonIntegralCoefficient,
        NonIntegralResult,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
