"""JSON / CSV / text rendering of :class:`~loghankel.verifier.BoundReport`."""
from __future__ import annotations

import csv
import io
import json

from .caratheodory import SchurParams
from .verifier import BoundReport, SearchConfig, Status

COLUMNS = [
    "class",
    "theoretical_bound",
    "observed_max",
    "argmax",
    "extremal_value",
    "consistency_residual",
    "envelope_violation",
    "eta",
    "status",
    "wall_time_s",
]


def sig12(x):
    """Round to 12 significant digits (None passes through)."""
    if x is None:
        return None
    return float(f"{float(x):.12g}")


def _pair(z: complex):
    return [sig12(z.real), sig12(z.imag)]


def report_to_dict(report: BoundReport, cfg: SearchConfig | None = None) -> dict:
    tag = getattr(report.tag, "value", report.tag)
    arg = None
    if report.argmax is not None:
        arg = {
            "zeta1": sig12(report.argmax.zeta1),
            "zeta2": _pair(report.argmax.zeta2),
            "zeta3": _pair(report.argmax.zeta3),
        }
    d = {
        "class": tag,
        "theoretical_bound": sig12(report.theoretical_bound),
        "observed_max": sig12(report.observed_max),
        "argmax": arg,
        "extremal_value": sig12(report.extremal_value),
        "consistency_residual": sig12(report.consistency_residual),
        "envelope_violation": sig12(report.envelope_violation),
        "eta": sig12(report.eta),
        "status": report.status.value,
        "wall_time_s": sig12(report.wall_time),
        "flags": list(report.flags),
    }
    if report.error:
        d["error"] = report.error
    if cfg is not None:
        d["config"] = cfg.as_dict()
    return d


def report_from_dict(d: dict) -> BoundReport:
    from .classes import GeometricClass

    arg = d.get("argmax")
    params = None
    if arg:
        params = SchurParams(arg["zeta1"], complex(*arg["zeta2"]), complex(*arg["zeta3"]))
    try:
        tag = GeometricClass.parse(d["class"])
    except Exception:
        tag = d["class"]
    return BoundReport(
        tag=tag,
        theoretical_bound=d.get("theoretical_bound"),
        observed_max=d.get("observed_max"),
        argmax=params,
        extremal_value=d.get("extremal_value"),
        consistency_residual=d.get("consistency_residual"),
        envelope_violation=d.get("envelope_violation"),
        eta=d.get("eta"),
        status=Status(d["status"]),
        wall_time=d.get("wall_time_s") or 0.0,
        flags=list(d.get("flags", [])),
        error=d.get("error"),
    )


def to_json(reports, cfg: SearchConfig | None = None) -> str:
    if isinstance(reports, BoundReport):
        return json.dumps(report_to_dict(reports, cfg), indent=2)
    doc = {"config": cfg.as_dict() if cfg else None, "reports": [report_to_dict(r) for r in reports]}
    return json.dumps(doc, indent=2)


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def to_csv(reports, cfg: SearchConfig | None = None) -> str:
    if isinstance(reports, BoundReport):
        reports = [reports]
    buf = io.StringIO()
    if cfg is not None:
        buf.write("# " + " ".join(f"{k}={v}" for k, v in cfg.as_dict().items()) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS[:3] + ["argmax_zeta1", "argmax_zeta2_re", "argmax_zeta2_im", "argmax_zeta3_re", "argmax_zeta3_im"] + COLUMNS[4:] + ["flags"])
    for r in reports:
        d = report_to_dict(r)
        a = d["argmax"] or {"zeta1": None, "zeta2": [None, None], "zeta3": [None, None]}
        row = [d["class"], d["theoretical_bound"], d["observed_max"], a["zeta1"], *a["zeta2"], *a["zeta3"]]
        row += [d[k] for k in COLUMNS[4:]] + [";".join(d["flags"])]
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _fmt(x, spec=".12f"):
    return "n/a" if x is None else format(x, spec)


def to_text(reports, cfg: SearchConfig | None = None) -> str:
    if isinstance(reports, BoundReport):
        reports = [reports]
    lines = []
    if cfg is not None:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in cfg.as_dict().items()))
    for r in reports:
        tag = getattr(r.tag, "value", r.tag)
        lines.append(f"{tag}: bound {_fmt(r.theoretical_bound)} observed {_fmt(r.observed_max)}  {r.status.value}")
        if r.error:
            lines.append(f"    error: {r.error}")
            continue
        if r.argmax is not None:
            z = r.argmax
            lines.append(f"    argmax zeta1={z.zeta1:.9f} zeta2={z.zeta2:.9f} zeta3={z.zeta3:.9f}")
        lines.append(
            f"    extremal {_fmt(r.extremal_value)}  consistency {_fmt(r.consistency_residual, '.3e')}"
            f"  envelope {_fmt(r.envelope_violation, '.3e')}  eta {_fmt(r.eta, '.9f')}  time {r.wall_time:.2f}s"
        )
        if r.flags:
            lines.append("    flags: " + ", ".join(r.flags))
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "csv": to_csv, "text": to_text}
