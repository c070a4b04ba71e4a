"""Command line front end.

Subcommands: analyze a chord, enumerate chord identifiers, list the accord
chain, print or verify the three-voice table, repan a MIDI file, and serve
the HTTP API.  Analysis output is the same JSON the HTTP service returns.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import RequestError, analyze_payload, build_table
from .enumeration import ChordId, rank, successor, unrank
from .midi import RepanLayout, SmfParseError, parse_smf, repan_segments, write_smf
from .model import Chord
from .optimizer import OptimizerConfig, PanMode, accord_chain, optimize
from .render import SCHEMA_VERSION, number, report_to_dict
from .tables import check_reference, computed_table


def _parse_int_list(text: str, what: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise SystemExit(f"error: {what} must be comma-separated integers, got {text!r}")


def _table_from_args(args) -> dict | None:
    if args.table is None and args.octave_increment is None:
        return None
    table: dict = {}
    if args.table is not None:
        table["values"] = _parse_int_list(args.table, "--table")
    if args.octave_increment is not None:
        table["octave_increment"] = args.octave_increment
    return table


def _analysis_payload(args) -> dict:
    payload: dict = {"mode": args.mode, "base_note": args.base_note,
                     "swap_channels": args.swap}
    if args.id:
        payload["chord_id"] = args.id
    if args.notes:
        payload["notes"] = _parse_int_list(args.notes, "--notes")
    if args.velocities:
        payload["velocities"] = _parse_int_list(args.velocities, "--velocities")
    if args.threshold is not None:
        payload["thresholds"] = {n: args.threshold for n in range(2, 17)}
    table = _table_from_args(args)
    if table is not None:
        payload["table"] = table
    return payload


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def cmd_analyze(args) -> int:
    try:
        _print_json(analyze_payload(_analysis_payload(args)))
    except RequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_enum(args) -> int:
    try:
        if args.id:
            chord_id = ChordId.parse(args.id)
            offsets = unrank(chord_id)
        elif args.offsets:
            offsets = tuple(_parse_int_list(args.offsets, "--offsets"))
            chord_id = rank(offsets)
        else:
            print("error: give --id or --offsets", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for _ in range(max(1, args.count)):
        print(f"{chord_id.n}v{chord_id.a} {','.join(str(o) for o in offsets)}")
        offsets = successor(offsets)
        chord_id = rank(offsets)
    return 0


def cmd_chain(args) -> int:
    try:
        ids = accord_chain(args.voices, args.limit)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    mode = PanMode.FIXED2 if args.voices == 2 else PanMode.FIXED3
    rows = []
    for position, chord_id in enumerate(ids, start=1):
        offsets = unrank(chord_id)
        report = optimize(Chord.from_offsets(offsets), OptimizerConfig(mode=mode))
        rows.append({"position": position, "id": str(chord_id),
                     "composition": list(offsets), "tdiss": number(report.total)})
    if args.json:
        _print_json({"schema": SCHEMA_VERSION, "n": args.voices, "chain": rows})
    else:
        for row in rows:
            comp = ",".join(str(o) for o in row["composition"])
            print(f"{row['position']:>3}  {row['id']:<8} {comp:<12} tdiss {row['tdiss']}")
    return 0


def cmd_table(args) -> int:
    try:
        rows = computed_table(args.voices)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.check:
        matches, total, problems = check_reference()
        for problem in problems:
            print(f"mismatch: {problem}", file=sys.stderr)
        print(f"{matches}/{total} match")
        return 0 if not problems else 1
    if args.json:
        _print_json({"schema": SCHEMA_VERSION, "n": args.voices, "rows": rows})
        return 0
    print(f"{'id':<6} {'chord':<10} {'1pt':<16} {'3pt':<20} {'2pt':<20}")
    for row in rows:
        comp = ",".join(str(o) for o in row["composition"])
        cells = []
        for mode in ("1", "3", "2"):
            m = row["modes"][mode]
            cells.append(f"{m['tdiss']:>3} {m['assignment']}")
        print(f"{row['id']:<6} {comp:<10} {cells[0]:<16} {cells[1]:<20} {cells[2]:<20}")
    return 0


def _repan_reports_json(results) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "segments": [
            {"onset": segment.onset_tick, **report_to_dict(report)}
            for segment, report in results
        ],
    }


def cmd_repan(args) -> int:
    in_path = Path(args.input)
    out_path = Path(args.output)
    report_path = Path(args.report) if args.report else out_path.with_suffix(
        out_path.suffix + ".report.json")
    for target in (out_path, report_path):
        if target.exists() and not args.force:
            print(f"error: {target} exists, pass --force to overwrite", file=sys.stderr)
            return 2
    try:
        timeline = parse_smf(in_path.read_bytes())
    except OSError as exc:
        print(f"error: cannot read {in_path}: {exc}", file=sys.stderr)
        return 2
    except SmfParseError as exc:
        print(f"error: {in_path}: {exc}", file=sys.stderr)
        return 2
    try:
        thresholds = OptimizerConfig().thresholds
        if args.threshold is not None:
            thresholds = {n: args.threshold for n in range(2, 17)}
        config = OptimizerConfig(mode=PanMode.parse(args.mode), thresholds=thresholds,
                                 base_note=args.base_note, swap_channels=args.swap)
        layout = RepanLayout(*_parse_int_list(args.channels, "--channels")) \
            if args.channels else RepanLayout()
        table = build_table(_table_from_args(args))
        out_timeline, results = repan_segments(timeline, config, layout, table,
                                               window_ticks=args.window)
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out_path.write_bytes(write_smf(out_timeline))
    report_path.write_text(json.dumps(_repan_reports_json(results), indent=2,
                                      ensure_ascii=False))
    print(f"wrote {out_path} ({len(results)} segments), report {report_path}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.bind, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dichotic",
        description="Score chord dissonance under stereo pannings, pick optimal "
                    "left/center/right voice layouts, and repan MIDI files for "
                    "headphone listening.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_analysis_flags(p, with_chord=True):
        if with_chord:
            p.add_argument("--id", help="chord identifier like 3v19")
            p.add_argument("--notes", help="comma-separated MIDI notes, e.g. 60,64,67")
            p.add_argument("--velocities", help="comma-separated velocities per note")
        p.add_argument("--mode", default="3", choices=["1", "2", "3", "free"],
                       help="panorama mode (default 3)")
        p.add_argument("--threshold", type=int,
                       help="keep chords at or below this total in the center")
        p.add_argument("--base-note", type=int, default=60,
                       help="MIDI note for offset 0 (default 60)")
        p.add_argument("--swap", action="store_true", help="swap left/right channels")
        p.add_argument("--table", help="13 comma-separated interval values (0..12)")
        p.add_argument("--octave-increment", type=int,
                       help="dissonance added per extra octave (default 2)")

    p = sub.add_parser("analyze", help="score one chord and print the JSON report")
    add_analysis_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enum", help="list chord identifiers and their offsets")
    p.add_argument("--id", help="starting chord identifier")
    p.add_argument("--offsets", help="chord offsets anchored at 0, e.g. 0,4,7")
    p.add_argument("--count", type=int, default=1, help="how many chords to list")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("chain", help="most consonant in-octave chords, best first")
    p.add_argument("--voices", type=int, default=3)
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("table", help="print or verify the three-voice chord table")
    p.add_argument("--voices", type=int, default=3)
    p.add_argument("--check", action="store_true",
                   help="verify against the bundled reference rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("repan", help="rewrite a MIDI file with optimized panning")
    p.add_argument("input")
    p.add_argument("output")
    add_analysis_flags(p, with_chord=False)
    p.add_argument("--window", type=int,
                   help="chord grouping window in ticks (default 1/32 note)")
    p.add_argument("--channels", help="left,center,right output channels (default 0,1,2)")
    p.add_argument("--report", help="report sidecar path (default OUTPUT.report.json)")
    p.add_argument("--force", action="store_true", help="overwrite existing outputs")
    p.set_defaults(func=cmd_repan)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=int(os.environ.get("PORT", "8000")))
    p.add_argument("--bind", default=os.environ.get("BIND", "127.0.0.1"))
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
