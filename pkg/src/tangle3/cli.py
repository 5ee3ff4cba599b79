"""Command-line interface.

Exit codes: 0 for an isotopic pair (or success of a non-decision command),
1 for a non-isotopic pair, 2 for usage or input errors.  Set TANGLE3_TRACE=1
to include reduction traces in JSON reports by default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .braid import format_word, normalize_to_b5, parse_word
from .classify import equivalent
from .dehn import to_dehn
from .errors import TangleError
from .hexagon import apply_word, initial_boundary_weights
from .reducer import decide_bounds_disk
from .tracer import components_json, oracle_bounds_disk, pi1_word, trace

CURVE_CHOICES = ("e1", "e2", "e3")


def _curve_image(args):
    word = parse_word(args.word)
    return apply_word(initial_boundary_weights(args.curve), word)


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        json.dump(data, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        print(text)


def cmd_equiv(args) -> int:
    report = equivalent(parse_word(args.word_f), parse_word(args.word_g),
                        strict=args.strict)
    with_trace = args.trace or os.environ.get("TANGLE3_TRACE") == "1"
    _emit(args, report.to_json_dict(with_trace=with_trace),
          "isotopic" if report.isotopic else "not isotopic")
    return 0 if report.isotopic else 1


def cmd_weights(args) -> int:
    vec = _curve_image(args)
    _emit(args, vec.to_json_dict(), str(vec.to_json_dict()))
    return 0


def cmd_dehn(args) -> int:
    params, pants, rotation = to_dehn(_curve_image(args))
    data = params.to_json_dict()
    data["x"] = pants.to_json_dict()
    data["rotation"] = rotation
    _emit(args, data, str(data))
    return 0


def cmd_reduce(args) -> int:
    verdict = decide_bounds_disk(_curve_image(args))
    data = verdict.to_json_dict()
    text = ["bounds an essential disk" if verdict.bounds else
            f"does not bound ({verdict.rule})"]
    for step in verdict.steps:
        text.append(f"  {step.rule:14s} {step.homeo:12s} "
                    f"{step.before} -> {step.after}")
    _emit(args, data, "\n".join(text))
    return 0


def cmd_oracle(args) -> int:
    vec = _curve_image(args)
    bounds = oracle_bounds_disk(vec)
    components = trace(vec)
    word = pi1_word(components[0])
    pretty = "".join(f"{s}{'' if e == 1 else '^-1'}" for s, e in word) or "1"
    _emit(args, {"bounds": bounds, "pi1_word": pretty,
                 "components": components_json(components)},
          f"{'bounds' if bounds else 'does not bound'} (pi1 class {pretty})")
    return 0


def cmd_normalize(args) -> int:
    word = normalize_to_b5(parse_word(args.word))
    _emit(args, {"word": format_word(word)}, format_word(word))
    return 0


def cmd_selftest(args) -> int:
    """Re-run the published worked examples."""
    from .hexagon import WeightVector

    failures = 0

    def check(name, ok):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += not ok

    t0 = time.perf_counter()
    word = parse_word("s5 s3 s1 s2^-1 s3 s1")
    end = apply_word(initial_boundary_weights("e2"), word)
    check("worked example 1: final weights",
          end == WeightVector.of({(1, 5): 4, (3, 4): 3, (5, 6): 3, (3, 5): 1},
                                 {(1, 5): 1, (1, 6): 3, (4, 5): 3, (3, 5): 4}))
    params, pants, _ = to_dehn(end)
    check("worked example 1: nine parameters",
          params.nine_tuple == (4, 0, -1, 8, 1, -1, 4, 0, 0))
    check("worked example 1: pants weights",
          pants.to_json_dict() == {"12": 8, "23": 8})
    check("worked example 1: verdict",
          not decide_bounds_disk(end).bounds and not oracle_bounds_disk(end))
    rev = parse_word("s5^-1 s3^-1 s1^-1 s2 s3^-1 s1^-1")
    check("worked example 2: crossing-reversed tangle differs",
          not equivalent(word, rev).isotopic)
    check("flip rewrite removes s0/s5",
          normalize_to_b5(parse_word("s5^-1 s0^-1 s4 s5^-1 s1")).max_index() <= 4
          and format_word(normalize_to_b5(parse_word("s5^-1 s0^-1 s4 s5^-1 s1")))
          == "s1^-1 s2^-1 s3^-1 s1^-1 s2^-1 s1^-1 s4^-1 s2 s3 s2 s4 s3 s2 s1^-1 s3")
    check("presentation equivalence across the flip",
          equivalent(parse_word("s5 s1 s0^-1 s3 s1 s5"),
                     parse_word("s1 s3 s2^-1 s1 s2^-1 s1 s2 s3")).isotopic)
    print(f"selftest finished in {time.perf_counter() - t0:.2f}s")
    return 2 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tangle3",
        description="Decide isotopy of rational 3-tangles presented as "
                    "half-twist words.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, curve=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if curve:
            p.add_argument("--curve", choices=CURVE_CHOICES, default="e2",
                           help="which standard disk boundary to push forward")

    p = sub.add_parser("equiv", help="decide whether two words present "
                                     "isotopic tangles")
    p.add_argument("word_f")
    p.add_argument("word_g")
    p.add_argument("--strict", action="store_true",
                   help="evaluate all three curves and check the "
                        "two-implies-three rule")
    p.add_argument("--trace", action="store_true",
                   help="include reduction traces in JSON output")
    common(p, curve=False)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("weights", help="hexagon weights of a curve image")
    p.add_argument("word")
    common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("dehn", help="Dehn parameters of a curve image")
    p.add_argument("word")
    common(p)
    p.set_defaults(func=cmd_dehn)

    p = sub.add_parser("reduce", help="run the reduction loop with a trace")
    p.add_argument("word")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="free-group verdict for a curve image")
    p.add_argument("word")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("normalize", help="rewrite a word into s1..s4")
    p.add_argument("word")
    common(p, curve=False)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("selftest", help="re-run the published examples")
    p.set_defaults(func=cmd_selftest, json=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
