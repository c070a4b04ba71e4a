"""HTTP JSON API: the service behind the browser explorer.

Stateless FastAPI app; all shared data (interval table, reference rows) is
immutable.  Responses are JSON except when a repan is requested as raw MIDI
bytes.  CORS is wide open so the explorer can run from any origin.
"""

from __future__ import annotations

import base64
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .analysis import RequestError, analyze_payload
from .enumeration import ChordId, unrank
from .midi import SmfParseError, parse_smf, repan_segments, write_smf
from .model import Chord
from .optimizer import EmptyAssignmentSpaceError, OptimizerConfig, PanMode, \
    accord_chain, optimize
from .reference import REFERENCE_ROWS, rows_for
from .render import SCHEMA_VERSION, number, report_to_dict
from .tables import computed_table

MAX_UPLOAD_BYTES = 4 * 1024 * 1024


def _chord_payload(chord_id: ChordId, base_note: int) -> dict:
    offsets = unrank(chord_id)
    try:
        chord = Chord.from_offsets(offsets, base_note=base_note)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    modes = [PanMode.FIXED1]
    if chord_id.n >= 2:
        modes.append(PanMode.FIXED2)
    if chord_id.n >= 3:
        modes.append(PanMode.FIXED3)
    tdiss = {}
    assignments = {}
    reports = {}
    for mode in modes:
        try:
            report = optimize(chord, OptimizerConfig(mode=mode, base_note=base_note))
        except EmptyAssignmentSpaceError:
            continue
        rendered = report_to_dict(report)
        tdiss[mode.value] = rendered["total"]
        assignments[mode.value] = rendered["assignment"]
        reports[mode.value] = rendered
    reference = [
        {
            "ppn": row.ppn,
            "composition": row.composition,
            "tdiss": row.tdiss,
            "pleasantness": row.pleasantness,
            "ddiss": row.ddiss,
            "synergy": row.synergy,
            "difference": row.difference,
        }
        for row in rows_for(chord_id)
    ]
    label = next((row.label for row in REFERENCE_ROWS if row.chord_id == chord_id), None)
    return {
        "schema": SCHEMA_VERSION,
        "id": str(chord_id),
        "n": chord_id.n,
        "a": chord_id.a,
        "composition": list(offsets),
        "pitches": list(chord.pitches),
        "base_note": base_note,
        "label": label or None,
        "tdiss": tdiss,
        "assignments": assignments,
        "reports": reports,
        "reference": reference,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="dichotic-harmony", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/chord/{chord_id}")
    def get_chord(chord_id: str, base_note: int = Query(60, ge=0, le=127)):
        try:
            parsed = ChordId.parse(chord_id)
        except ValueError:
            raise HTTPException(status_code=404, detail=f"unknown chord id {chord_id!r}")
        return _chord_payload(parsed, base_note)

    @app.post("/api/analyze")
    async def post_analyze(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="request body must be JSON")
        try:
            return JSONResponse(analyze_payload(payload))
        except RequestError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.get("/api/chain")
    def get_chain(n: int = Query(3, ge=2), limit: int = Query(20, ge=1)):
        ids = accord_chain(n, limit)
        mode = PanMode.FIXED2 if n == 2 else PanMode.FIXED3
        chain = []
        for position, chord_id in enumerate(ids, start=1):
            offsets = unrank(chord_id)
            report = optimize(Chord.from_offsets(offsets), OptimizerConfig(mode=mode))
            chain.append({
                "position": position,
                "id": str(chord_id),
                "composition": list(offsets),
                "tdiss": number(report.total),
            })
        return {"schema": SCHEMA_VERSION, "n": n, "limit": limit, "chain": chain}

    @app.get("/api/table")
    def get_table(n: int = Query(3)):
        try:
            rows = computed_table(n)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        by_id = {row["id"]: row for row in rows}
        for ref in REFERENCE_ROWS:
            entry = by_id[str(ref.chord_id)]
            entry.setdefault("label", ref.label or None)
            entry.setdefault("reference", {})[str(ref.ppn)] = {
                "composition": ref.composition,
                "tdiss": ref.tdiss,
                "pleasantness": ref.pleasantness,
                "ddiss": ref.ddiss,
                "synergy": ref.synergy,
                "difference": ref.difference,
            }
        return {"schema": SCHEMA_VERSION, "n": n, "rows": rows}

    @app.post("/api/repan")
    async def post_repan(
        request: Request,
        mode: str = Query("3"),
        window_ticks: Optional[int] = Query(None, ge=0),
        base_note: int = Query(60, ge=0, le=127),
        swap_channels: bool = Query(False),
        threshold: Optional[int] = Query(None, ge=0),
        format: str = Query("json", pattern="^(json|midi)$"),
    ):
        body = await request.body()
        if len(body) > MAX_UPLOAD_BYTES:
            raise HTTPException(status_code=413, detail="MIDI upload too large")
        if not body:
            raise HTTPException(status_code=400, detail="empty request body")
        try:
            timeline = parse_smf(body)
            thresholds = OptimizerConfig().thresholds
            if threshold is not None:
                thresholds = {count: threshold for count in range(2, 17)}
            config = OptimizerConfig(mode=PanMode.parse(mode), thresholds=thresholds,
                                     base_note=base_note, swap_channels=swap_channels)
            out_timeline, results = repan_segments(timeline, config,
                                                   window_ticks=window_ticks)
            data = write_smf(out_timeline)
        except SmfParseError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        if format == "midi":
            return Response(content=data, media_type="audio/midi")
        return {
            "schema": SCHEMA_VERSION,
            "midi_base64": base64.b64encode(data).decode("ascii"),
            "segments": [
                {"onset": segment.onset_tick, **report_to_dict(report)}
                for segment, report in results
            ],
        }

    return app


app = create_app()
