"""Command-line pipeline: validate, partition, score, render, group.

Exit codes are stable across subcommands: 0 on success, 2 on a domain or
validation failure, 3 when a file cannot be read or parsed.  All outputs
are deterministic functions of the inputs and flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .documents import (
    PlanDocument,
    dumps_plan,
    dumps_profiles,
    parse_catalog,
    parse_profiles,
    parse_responses,
)
from .errors import DocumentError, MindwebError, UnknownIdError
from .grouping import GroupingConfig, Roster, solve_grouping
from .quotient import INTELLIGENCES, disjointify, overlap_set
from .render import RenderStyle, render_group, render_partition, render_sws
from .scoring import (
    PersonProfile,
    SwsVector,
    ideal_sws,
    profile_person,
    raw_ideal_sws,
    raw_score,
    validate_catalog,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _style(args: argparse.Namespace) -> RenderStyle:
    return RenderStyle(size=args.size, show_labels=not args.no_labels)


def _load_catalog(path: str):
    catalog = parse_catalog(_read(path))
    findings = validate_catalog(catalog)
    if findings:
        raise _Report(findings)
    return catalog


class _Report(MindwebError):
    """Carries validation findings up to the exit-code boundary."""

    def __init__(self, findings: list[str]):
        self.findings = list(findings)
        super().__init__("\n".join(self.findings))


def cmd_validate(args: argparse.Namespace) -> int:
    catalog = parse_catalog(_read(args.catalog))
    findings = validate_catalog(catalog)
    if findings:
        for line in findings:
            print(line)
        return EXIT_INVALID
    print(f"OK: {len(catalog.abilities)} abilities, "
          f"{len(overlap_set(catalog.family))} overlapping")
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    catalog = _load_catalog(args.catalog)
    partition = disjointify(catalog.family)

    if args.output == "svg":
        text = render_partition(partition, _style(args), joined=args.joined)
    else:
        overlap = overlap_set(catalog.family)
        lines = [f"overlapping abilities: {len(overlap)}"]
        for j, name in enumerate(INTELLIGENCES, start=1):
            members = sorted(partition.members(j))
            lines.append(f"class {j} {name}: {len(members)} abilities")
            for x in members:
                if x in overlap:
                    owners = ",".join(map(str, sorted(catalog.family.memberships(x))))
                    lines.append(f"  {x} (resolved from {{{owners}}})")
                else:
                    lines.append(f"  {x}")
        text = "\n".join(lines) + "\n"

    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_score(args: argparse.Namespace) -> int:
    catalog = _load_catalog(args.catalog)
    sheets = parse_responses(_read(args.responses))
    if args.raw:
        profiles = tuple(PersonProfile(s.person_id, raw_score(catalog, s),
                                       s.selected) for s in sheets)
        ideal = raw_ideal_sws(catalog)
    else:
        profiles = tuple(profile_person(catalog, s) for s in sheets)
        ideal = ideal_sws(catalog)
    roster = Roster(profiles, ideal)
    _write(args.out, dumps_profiles(roster))
    print(f"scored {len(profiles)} person(s) -> {args.out}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    roster = parse_profiles(_read(args.profiles))
    by_id = {p.person_id: p for p in roster.profiles}
    style = _style(args)

    if args.person is not None:
        if args.person not in by_id:
            raise UnknownIdError([args.person], kind="person id")
        text = render_sws(by_id[args.person].sws, roster.ideal, style)
    else:
        ids = [p.strip() for p in args.group.split(",") if p.strip()]
        unknown = [p for p in ids if p not in by_id]
        if unknown:
            raise UnknownIdError(unknown, kind="person id")
        members = [by_id[p].sws for p in ids]
        group_max = SwsVector.componentwise_max(members)
        text = render_group(members, group_max, roster.ideal, style)

    _write(args.out, text)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_group(args: argparse.Namespace) -> int:
    roster = parse_profiles(_read(args.profiles))
    config = GroupingConfig(group_size=args.size, mode=args.mode, seed=args.seed,
                            search_budget=args.budget, restarts=args.restarts)
    plan = solve_grouping(roster, config)
    _write(args.out, dumps_plan(PlanDocument(config, roster.ideal, plan)))
    print(f"{len(plan.groups)} group(s), objective "
          f"({plan.objective[0]}, {plan.objective[1]}) -> {args.out}")
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    catalog = _load_catalog(args.catalog)
    sheets = parse_responses(_read(args.responses))
    profiles = tuple(profile_person(catalog, s) for s in sheets)
    roster = Roster(profiles, ideal_sws(catalog))
    profiles_path = outdir / "profiles.json"
    _write(str(profiles_path), dumps_profiles(roster))

    config = GroupingConfig(group_size=args.size, mode=args.mode, seed=args.seed,
                            search_budget=args.budget, restarts=args.restarts)
    plan = solve_grouping(roster, config)
    plan_path = outdir / "plan.json"
    _write(str(plan_path), dumps_plan(PlanDocument(config, roster.ideal, plan)))

    by_id = {p.person_id: p for p in roster.profiles}
    style = _style(args)
    for i, members in enumerate(plan.groups, start=1):
        vectors = [by_id[m].sws for m in members]
        svg = render_group(vectors, SwsVector.componentwise_max(vectors),
                           roster.ideal, style)
        _write(str(outdir / f"group-{i:02d}.svg"), svg)

    print(f"pipeline complete: {len(profiles)} person(s), "
          f"{len(plan.groups)} group(s) -> {outdir}")
    return EXIT_OK


def _add_render_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--size", type=int, default=640,
                        help="canvas edge in pixels (default 640)")
    parser.add_argument("--no-labels", action="store_true",
                        help="omit the axis name captions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mindweb",
        description="Profile multiple intelligences, chart spider webs, "
                    "and form complementary groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a catalog document")
    p.add_argument("catalog")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("partition",
                       help="show the reduced classes of a catalog")
    p.add_argument("catalog")
    p.add_argument("--output", choices=("text", "svg"), default="text")
    p.add_argument("--joined", action="store_true",
                   help="connect the outermost dots into one web (svg only)")
    p.add_argument("--out", help="write here instead of standard output")
    _add_render_flags(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("score", help="score response sheets against a catalog")
    p.add_argument("catalog")
    p.add_argument("responses", help="JSON document or tabular rows")
    p.add_argument("--out", required=True, help="profiles document to write")
    p.add_argument("--raw", action="store_true",
                   help="count against the overlapping classes instead of "
                        "the reduced ones")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("render", help="draw a person or group web as SVG")
    p.add_argument("profiles")
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--person", help="person id to draw")
    who.add_argument("--group", help="comma-separated person ids to overlay")
    p.add_argument("--out", required=True)
    _add_render_flags(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("group", help="form complementary groups from profiles")
    p.add_argument("profiles")
    p.add_argument("--size", type=int, required=True, help="target group size")
    p.add_argument("--mode", choices=("greedy", "local", "exact"),
                   default="local")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=32,
                   help="max local-search passes")
    p.add_argument("--restarts", type=int, default=0,
                   help="extra seeded local-search starts")
    p.add_argument("--out", required=True, help="plan document to write")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("pipeline",
                       help="validate, score, group, and render in one go")
    p.add_argument("catalog")
    p.add_argument("responses")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--mode", choices=("greedy", "local", "exact"),
                   default="local")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=32)
    p.add_argument("--restarts", type=int, default=0)
    p.add_argument("--outdir", required=True)
    _add_render_flags(p)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Report as report:
        for line in report.findings:
            print(line, file=sys.stderr)
        return EXIT_INVALID
    except (DocumentError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MindwebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
