"""Command-line interface: verify, construct, classify, enumerate, check-lemmas.

Exit codes: 0 success (verify: Valid/ValidUpToWindow), 1 invalid presentation
or unclassifiable input, 2 malformed input, 3 window too small.  With
``--json`` every stdout line is a JSON document; otherwise output is a small
human-readable table.

Configuration precedence for defaults (window, bounds): command-line flag,
then the SRING_* environment variable, then a key=value config file passed
via --config, then the built-in default.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from .classify import (
    RECOMMENDED_WINDOW,
    classify,
    find_H,
    resynthesize,
)
from .constructions import discrete, orbit_ring, standard_wedge, tensor, trivial
from .enumeration import enumerate_finite, enumerate_windowed, is_traditional
from .errors import (
    BoundExceeded,
    MalformedPartition,
    SchurError,
    Unclassifiable,
    WindowTooSmall,
)
from .groups import GroupDescriptor, automorphism_from_json
from .schur import (
    SchurPresentation,
    class_shape_holds,
    frobenius_closure_holds,
    multiplier_sets_hold,
    power_in_subgroup_holds,
    torsion_subgroup_holds,
    verify_axioms,
    verify_wielandt,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MALFORMED = 2
EXIT_WINDOW = 3

_DEFAULTS = {
    "window": RECOMMENDED_WINDOW,
    "finite_bound": 16,
    "orbit_bound": 64,
}


@dataclass
class Settings:
    window: int
    finite_bound: int
    orbit_bound: int


def _load_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line is not key=value: {line!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip().strip('"')
    return values


def resolve_settings(args: argparse.Namespace) -> Settings:
    """flag > environment > config file > default."""
    file_values = _load_config_file(args.config) if getattr(args, "config", None) else {}
    resolved = {}
    for key, default in _DEFAULTS.items():
        flag = getattr(args, key, None)
        env = os.environ.get(f"SRING_{key.upper()}")
        if flag is not None:
            resolved[key] = int(flag)
        elif env is not None:
            resolved[key] = int(env)
        elif key in file_values:
            resolved[key] = int(file_values[key])
        else:
            resolved[key] = default
    return Settings(**resolved)


_GROUP_RE = re.compile(r"^Z(?:(\d+))?(?:xZ(\d+))?$", re.IGNORECASE)


def parse_group(text: str) -> GroupDescriptor:
    """Parse "Z", "Zn", "ZxZm", or "ZnxZm"."""
    match = _GROUP_RE.match(text.strip())
    if not match:
        raise ValueError(f"cannot parse group {text!r} (expected Zn, ZxZm or ZnxZm)")
    first, second = match.group(1), match.group(2)
    if second is None:
        if first is None:
            return GroupDescriptor(0, 1)  # plain Z
        return GroupDescriptor(1, int(first))  # cyclic Z_n as the torsion factor
    return GroupDescriptor(0 if first is None else int(first), int(second))


def _read_presentation(source: str) -> SchurPresentation:
    raw = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    return SchurPresentation.from_json(json.loads(raw))


def _emit(data: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human)


# -- subcommands ---------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        P = _read_presentation(args.presentation)
        if args.window is not None and P.group.is_infinite:
            P = SchurPresentation(P.group, P.classes, window=int(args.window), tag=P.tag)
        report = verify_axioms(P)
    except (MalformedPartition, json.JSONDecodeError, KeyError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"malformed: {ex}")
        return EXIT_MALFORMED
    human = f"verdict: {report.verdict} (checked {report.checked_pairs} class pairs)"
    if report.witness:
        human += f"\nwitness [{report.witness.kind}]: {report.witness.detail}"
    _emit(report.to_json(), args.json, human)
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_construct(args: argparse.Namespace) -> int:
    settings = resolve_settings(args)
    params = json.loads(args.params) if args.params else {}
    window = settings.window
    group = parse_group(params.get("group", "ZxZ3"))
    try:
        if args.kind == "discrete":
            P = discrete(group, window)
        elif args.kind == "trivial":
            P = trivial(group)
        elif args.kind == "orbit":
            gens = [automorphism_from_json(g, group) for g in params.get("gens", [])]
            P = orbit_ring(group, gens, window, bound=settings.orbit_bound)
        elif args.kind == "tensor":
            left = SchurPresentation.from_json(params["left"])
            right = SchurPresentation.from_json(params["right"])
            P = tensor(left, right)
        elif args.kind == "wedge":
            P = standard_wedge(
                group,
                int(params.get("step", 0)),
                params.get("inner", "discrete"),
                params.get("outer", "discrete"),
                window,
            )
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(args.kind)
    except (SchurError, KeyError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"construction failed: {ex}")
        return EXIT_MALFORMED
    print(json.dumps(P.to_json(), sort_keys=True))
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        P = _read_presentation(args.presentation)
    except (json.JSONDecodeError, KeyError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"malformed: {ex}")
        return EXIT_MALFORMED
    try:
        descriptor = classify(P)
    except WindowTooSmall as ex:
        _emit({"error": str(ex)}, args.json, f"window too small: {ex}")
        return EXIT_WINDOW
    except (Unclassifiable, SchurError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"unclassifiable: {ex}")
        return EXIT_INVALID
    if args.resynthesize:
        rebuilt = resynthesize(descriptor, P.window)
        print(json.dumps(rebuilt.to_json(), sort_keys=True))
    else:
        _emit(descriptor.to_json(), args.json, descriptor.describe())
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    settings = resolve_settings(args)
    try:
        if args.windowed is not None:
            presentations = enumerate_windowed(int(args.windowed), projection=args.projection)
            label = f"ZxZ3 window {args.windowed}"
            histogram: dict[str, int] = {}
        else:
            group = parse_group(args.group)
            presentations = enumerate_finite(group, bound=settings.finite_bound)
            label = args.group
            histogram = {}
            for P in presentations:
                kind = is_traditional(P).kind
                histogram[kind] = histogram.get(kind, 0) + 1
    except (BoundExceeded, SchurError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"enumeration failed: {ex}")
        return EXIT_MALFORMED
    for P in presentations:
        print(json.dumps(P.to_json(), sort_keys=True))
    summary = {"group": label, "count": len(presentations), "traditionality": histogram}
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"-- {label}: {len(presentations)} presentations", file=sys.stderr)
        for kind, count in sorted(histogram.items()):
            print(f"   {kind:<8} {count}", file=sys.stderr)
    return EXIT_OK


def _cmd_check_lemmas(args: argparse.Namespace) -> int:
    try:
        P = _read_presentation(args.presentation)
    except (json.JSONDecodeError, KeyError, ValueError) as ex:
        _emit({"error": str(ex)}, args.json, f"malformed: {ex}")
        return EXIT_MALFORMED
    rows: list[tuple[str, bool, str]] = []
    report = verify_axioms(P)
    rows.append(("axioms", report.ok, f"verdict {report.verdict}"))
    wielandt = verify_wielandt(P)
    rows.append(
        ("wielandt-agreement", wielandt.verdict == report.verdict, f"verdict {wielandt.verdict}")
    )
    for k in (2, 4, 5, 7):
        ok, msg = frobenius_closure_holds(P, k)
        rows.append((f"frobenius-closure k={k}", ok, msg))
    ok, msg = torsion_subgroup_holds(P)
    rows.append(("torsion-s-subgroup", ok, msg))
    p = P.group.torsion_order if P.group.is_infinite else None
    if p and p > 1:
        ok, msg = multiplier_sets_hold(P, p)
        rows.append((f"multiplier-sets p={p}", ok, msg))
        ok, msg = class_shape_holds(P)
        rows.append(("class-shape", ok, msg))
        try:
            H = find_H(P)
            ok, msg = power_in_subgroup_holds(P, H)
            rows.append(("small-class-powers", ok, msg))
        except (WindowTooSmall, SchurError) as ex:
            rows.append(("small-class-powers", False, str(ex)))
    if args.json:
        print(
            json.dumps(
                {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in rows]},
                sort_keys=True,
            )
        )
    else:
        width = max(len(n) for n, _, _ in rows)
        for name, ok, detail in rows:
            print(f"{name:<{width}}  {'pass' if ok else 'FAIL'}  {detail}")
    return EXIT_OK if all(ok for _, ok, _ in rows) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sring",
        description="Exact-arithmetic toolkit for Schur rings over Z x Z_3 and finite analogues.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON on stdout")
    parser.add_argument("--config", help="key=value config file for defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify the Schur-ring axioms of a presentation")
    p_verify.add_argument("presentation", help="presentation JSON file, or - for stdin")
    p_verify.add_argument("--window", type=int, default=None, help="override the window")
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = sub.add_parser("construct", help="build a presentation from a construction")
    p_construct.add_argument(
        "--kind",
        required=True,
        choices=["discrete", "trivial", "orbit", "tensor", "wedge"],
    )
    p_construct.add_argument("--params", default="{}", help="construction parameters as JSON")
    p_construct.add_argument("--window", type=int, default=None)
    p_construct.add_argument("--orbit-bound", dest="orbit_bound", type=int, default=None)
    p_construct.set_defaults(func=_cmd_construct)

    p_classify = sub.add_parser("classify", help="identify the family of a presentation")
    p_classify.add_argument("presentation", help="presentation JSON file, or - for stdin")
    p_classify.add_argument(
        "--resynthesize",
        action="store_true",
        help="emit the re-synthesized presentation instead of the descriptor",
    )
    p_classify.set_defaults(func=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="exhaustively enumerate Schur rings")
    target = p_enum.add_mutually_exclusive_group(required=True)
    target.add_argument("--group", help="finite group, e.g. Z6 or Z4xZ3")
    target.add_argument("--windowed", type=int, help="window over ZxZ3")
    p_enum.add_argument("--projection", choices=["discrete", "symmetric"], default=None)
    p_enum.add_argument("--finite-bound", dest="finite_bound", type=int, default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_lemmas = sub.add_parser("check-lemmas", help="run the closure-law checks on a presentation")
    p_lemmas.add_argument("presentation", help="presentation JSON file, or - for stdin")
    p_lemmas.set_defaults(func=_cmd_check_lemmas)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main() -> None:  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
