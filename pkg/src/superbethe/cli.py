"""Command line interface.

    superbethe hc         --algebra 2|1 --c 1 --s JSON --t JSON [--route low|high]
    superbethe sp-formula --model FILE --s JSON --t JSON
    superbethe sp-oracle  --model FILE --s JSON --t JSON [--route low|high]
    superbethe extract-w  --algebra 1|1 --c 1 --s JSON --t JSON [--model FILE] [--seed N]
    superbethe verify     --suite NAME [--seed N]

Families are JSON lists of per-color lists of rationals, e.g. '[["1/2","3"],[]]',
or objects of the form {"sets": [...]}.  Output is one JSON document on stdout.
Exit codes: 0 ok, 1 failed check, 2 usage error, 3 pole or degeneracy.
"""
import argparse
import json
import random
import sys

from .bethe import Route, scalar_product_oracle
from .errors import DegenerateModelError, IdentifiabilityError, PoleError
from .fock import ChainModel
from .hc import HcRoute, hc
from .partitions import BetheFamily, balanced_split_count, split_sets
from .rational import format_rational, parse_rational
from .scalar import extract_w, model_alpha, sum_formula
from .signature import AlgebraSignature
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _parser():
    ap = argparse.ArgumentParser(prog="superbethe", description="Exact gl(m|n) Bethe vector and scalar product engine")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, model=False, families=True):
        p.add_argument("--algebra", help="signature as m|n")
        p.add_argument("--c", help="constant c as integer or p/q")
        if families:
            p.add_argument("--s", help="dual family (JSON)")
            p.add_argument("--t", help="family (JSON)")
        p.add_argument("--model", help="chain model JSON file" + (" (required)" if model else ""))
        p.add_argument("--route", choices=["low", "high"], default="low")
        p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("hc", help="highest coefficient Z(s|t)"))
    common(sub.add_parser("sp-formula", help="scalar product via the sum formula"), model=True)
    common(sub.add_parser("sp-oracle", help="scalar product in the chain model"), model=True)
    common(sub.add_parser("extract-w", help="solve for split weights from chain data"))
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=["all", *SUITES])
    v.add_argument("--seed", type=int, default=0)
    return ap


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"{what}: invalid JSON ({err})") from None


def _read_models(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read model file {path}: {err}") from None
    if isinstance(data, dict) and "models" in data:
        data = data["models"]
    items = data if isinstance(data, list) else [data]
    try:
        return [ChainModel.from_json(d) for d in items]
    except (KeyError, ValueError, TypeError) as err:
        raise UsageError(f"bad model in {path}: {err}") from None


def _signature_and_c(args, models=()):
    sig = c = None
    if models:
        sig, c = models[0].sig, models[0].c
    try:
        if args.algebra:
            given = AlgebraSignature.parse(args.algebra)
            if sig is not None and given != sig:
                raise UsageError(f"--algebra {given} disagrees with the model's {sig}")
            sig = given
        if args.c:
            given = parse_rational(args.c)
            if c is not None and given != c:
                raise UsageError(f"--c {args.c} disagrees with the model's c")
            c = given
    except ValueError as err:
        raise UsageError(str(err)) from None
    if sig is None or c is None:
        raise UsageError("--algebra and --c (or --model) are required")
    return sig, c


def _family(args, name, sig):
    text = getattr(args, name)
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return BetheFamily.from_json(sig, _load_json(text, f"--{name}"))
    except (ValueError, KeyError, TypeError) as err:
        raise UsageError(f"--{name}: {err}") from None


def _split_json(sets, idx):
    I, _ = split_sets(sets, idx)
    return [[format_rational(x) for x in part] for part in I]


def _extract(args, sig, c, s, t):
    if args.model:
        models = _read_models(args.model)
        if any(m.sig != sig or m.c != c for m in models):
            raise UsageError("all models must share the requested algebra and c")
    else:
        rng = random.Random(args.seed)
        pts = [x for f in (s, t) for part in f.sets for x in part]
        L = max(1, s.r[0]) if s.r else 1
        models = [ChainModel.random(sig, c, L, rng, avoid=pts) for _ in range(balanced_split_count(s.r) + 2)]
    try:
        ex = extract_w(models, s, t)
    except IdentifiabilityError as err:
        classes = []
        sums = err.class_sums or [None] * len(err.classes)
        for cls, total in zip(err.classes, sums):
            classes.append({"splits": [{"s_I": _split_json(s.sets, si), "t_I": _split_json(t.sets, ti)} for si, ti in cls],
                            "sum": None if total is None else format_rational(total)})
        return 3, {"identifiability": {"models": len(models), "classes": classes}}
    rows = [{"split": {"s_I": _split_json(s.sets, si), "t_I": _split_json(t.sets, ti)}, "value": format_rational(v)}
            for (si, ti), v in zip(ex.splits, ex.values)]
    return 0, {"W": rows, "models": len(models)}


def run(argv=None):
    """Execute one command; returns (exit status, JSON-able document)."""
    args = _parser().parse_args(argv)
    if args.command == "verify":
        checks = run_suite(args.suite, args.seed)
        doc = {"suite": args.suite, "seed": args.seed, "checks": [c.to_json() for c in checks]}
        return (0 if all(c.passed for c in checks) else 1), doc
    models = _read_models(args.model) if args.model and args.command != "extract-w" else []
    if args.command in ("sp-formula", "sp-oracle") and not models:
        raise UsageError(f"{args.command} needs --model")
    sig, c = _signature_and_c(args, models)
    s, t = _family(args, "s", sig), _family(args, "t", sig)
    if args.command == "hc":
        if s.r != t.r:
            raise UsageError("hc needs families with equal colorings")
        route = HcRoute.REC_S1 if args.route == "low" else HcRoute.REC_TN
        return 0, {"Z": format_rational(hc(sig, c, s, t, route))}
    if args.command == "sp-formula":
        return 0, {"S": format_rational(sum_formula(sig, c, s, t, model_alpha(models[0])))}
    if args.command == "sp-oracle":
        route = Route.LOW_COLOR if args.route == "low" else Route.HIGH_COLOR
        return 0, {"S": format_rational(scalar_product_oracle(models[0], s, t, route))}
    if s.r != t.r:
        raise UsageError("extract-w needs families with equal colorings")
    return _extract(args, sig, c, s, t)


def main(argv=None):
    try:
        status, doc = run(argv)
    except UsageError as err:
        print(f"superbethe: error: {err}", file=sys.stderr)
        return 2
    except (PoleError, DegenerateModelError, ZeroDivisionError) as err:
        detail = {"type": type(err).__name__, "message": str(err)}
        if isinstance(err, PoleError):
            detail["pair"] = [format_rational(x) for x in err.pair]
        print(json.dumps({"error": detail}))
        return 3
    print(json.dumps(doc, indent=None))
    return status


if __name__ == "__main__":
    sys.exit(main())
