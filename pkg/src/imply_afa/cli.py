"""Command-line entry point: ``imply-afa <subcommand> ...``.

Every subcommand prints human-readable text by default and a JSON run report
with ``--json``. Reports hold no wall-clock data, so repeated runs are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .analog import VteamParams, run_program_analog
from .cells import PROPOSED, CellKind, extract_truth_table, get_program
from .design import EXACT_TABLE, filter_candidates, generate_family
from .error_analysis import exhaustive_metrics
from .fom import fom_table, inputs_from_metrics, published_inputs
from .imaging import apps, samples
from .imaging.pnm import read_pnm, write_pnm
from .logic import run_program
from .rca import RcaConfig, energy_estimate, memristor_count, rca_add, step_count
from .reproduce import TABLES, reproduce

SCHEMA = "imply-afa.run-report/1"
WORKERS_ENV = "IMPLY_AFA_WORKERS"
CELL_CHOICES = [k.value for k in CellKind]


class CliError(Exception):
    pass


def workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _map(fn, items):
    items = list(items)
    n = min(workers(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))  # order preserved


def _json_default(obj):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _clean(value):
    # JSON has no infinities
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def render_report(argv: list[str], result) -> str:
    report = {"schema": SCHEMA, "version": __version__, "command": list(argv), "result": result}
    return json.dumps(_clean(json.loads(json.dumps(report, default=_json_default))),
                      indent=2, sort_keys=True) + "\n"


def _config(args) -> RcaConfig:
    cell = CellKind.parse(args.cell)
    if getattr(args, "approx_lsbs", None) is not None:
        return RcaConfig(n=args.n, approx_lsbs=args.approx_lsbs, cell=cell)
    return RcaConfig.scenario(args.scenario, cell, n=args.n)


# --- truthtable ---------------------------------------------------------------

def _lookup_table(name: str):
    upper = name.upper()
    if upper.startswith("AFA"):
        family = "cout-flip" if int(upper[3:] or 0) <= 8 else "sum-flip"
        for table in generate_family(family):
            if table.name == upper:
                return table
        raise CliError(f"unknown candidate {name!r}; AFA1..AFA16 exist")
    kind = CellKind.parse(name)
    return EXACT_TABLE if kind is CellKind.EXACT else extract_truth_table(kind)


def cmd_truthtable(args):
    table = _lookup_table(args.cell)
    rows = table.to_dict()["rows"]
    if args.format == "csv":
        lines = ["A,B,C,Sum,Cout"] + [f"{r['A']},{r['B']},{r['C']},{r['Sum']},{r['Cout']}" for r in rows]
        return table.to_dict(), "\n".join(lines) + "\n"
    text = [f"{table.name} ({table.provenance})", "A B C | Sum Cout"]
    text += [f"{r['A']} {r['B']} {r['C']} |  {r['Sum']}    {r['Cout']}" for r in rows]
    return table.to_dict(), "\n".join(text) + "\n"


# --- design -------------------------------------------------------------------

def cmd_design(args):
    result = filter_candidates(generate_family(args.family))
    payload = {"family": args.family, "accepted": result.accepted_names,
               "rejected": result.rejected_names, "verdicts": [v.to_dict() for v in result.verdicts()]}
    lines = []
    for v in result.verdicts():
        m = v.metrics
        status = "accept" if v.accepted else "reject"
        note = "; ".join(v.reasons + v.flags)
        lines.append(f"{v.name:<6} ER_Sum={m.er_sum!s:<4} ER_Cout={m.er_cout!s:<4} ED={m.ed}  {status}"
                     + (f"  ({note})" if note else ""))
    lines.append("accepted: " + ", ".join(result.accepted_names))
    return payload, "\n".join(lines) + "\n"


# --- simulate -----------------------------------------------------------------

def _parse_inputs(text: str) -> tuple[int, int, int]:
    if len(text) != 3 or any(ch not in "01" for ch in text):
        raise CliError(f"--inputs must be three bits such as 011, got {text!r}")
    return tuple(int(ch) for ch in text)


def cmd_simulate(args):
    program = get_program(args.cell)
    abc = _parse_inputs(args.inputs)
    if args.analog:
        trace = run_program_analog(program, *abc, params=VteamParams(),
                                   sample_every=args.sample_every if args.csv else None)
        payload = {
            "cell": program.name, "inputs": list(abc), "mode": "analog",
            "sum": trace.sum, "cout": trace.cout,
            "energy_nj": trace.total_energy * 1e9,
            "final_resistance_ohm": dict(zip(program.registers, trace.resistances)),
            "ambiguous": trace.ambiguous,
        }
        csv_text = trace.to_csv() if args.csv else None
        text = (f"{program.name} ABC={args.inputs} (analog): Sum={trace.sum} Cout={trace.cout} "
                f"E={payload['energy_nj']:.5f} nJ\n")
        for name, r in payload["final_resistance_ohm"].items():
            text += f"  {name:<3} R={r / 1e3:9.2f} kOhm\n"
    else:
        trace = run_program(program, *abc)
        payload = {"cell": program.name, "inputs": list(abc), "mode": "logic",
                   "sum": trace.sum, "cout": trace.cout, "steps": trace.steps,
                   "snapshots": [list(s) for s in trace.snapshots]}
        csv_text = trace.to_csv() if args.csv else None
        header = "step  op".ljust(22) + " ".join(f"{n:>3}" for n in program.registers)
        text = header + "\n" + "0     (initial)".ljust(22) + " ".join(f"{b:>3}" for b in trace.snapshots[0]) + "\n"
        for line, snap in zip(program.listing(), trace.snapshots[1:]):
            text += line.ljust(22) + " ".join(f"{b:>3}" for b in snap) + "\n"
        text += f"Sum={trace.sum} Cout={trace.cout}\n"
    if args.csv:
        Path(args.csv).write_text(csv_text)
    return payload, text


# --- rca ----------------------------------------------------------------------

def cmd_rca(args):
    config = _config(args)
    payload = {"cell": config.cell.value, "config": config.to_dict(), "steps": step_count(config),
               "energy_nj": energy_estimate(config), "memristors": memristor_count(config.n)}
    text = (f"{config.cell.value}: n={config.n}, approximate LSBs={config.approx_lsbs}\n"
            f"  steps={payload['steps']}  energy={payload['energy_nj']:.5f} nJ  memristors={payload['memristors']}\n")
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise CliError("--a and --b must be given together")
        res = rca_add(config, args.a, args.b, args.cin)
        payload.update({"a": args.a, "b": args.b, "cin": args.cin, "sum": res.sum,
                        "exact": args.a + args.b + args.cin, "carries": list(res.carries)})
        text += f"  {args.a} + {args.b} + {args.cin} = {res.sum} (exact {payload['exact']})\n"
    return payload, text


# --- errors -------------------------------------------------------------------

def _error_row(key):
    cell, scenario, n, m = key
    config = RcaConfig(n=n, approx_lsbs=m, cell=cell) if scenario is None else RcaConfig.scenario(scenario, cell, n)
    r = exhaustive_metrics(config)
    return {"cell": config.cell.value, "scenario": scenario, "config": config.to_dict(), **r.to_dict()}


def cmd_errors(args):
    if args.all:
        keys = [(k.value, s, args.n, None) for s in (1, 2, 3) for k in PROPOSED]
    else:
        keys = [(args.cell, None if args.approx_lsbs is not None else args.scenario, args.n, args.approx_lsbs)]
    rows = _map(_error_row, keys)
    text = "".join(f"{r['cell']:<6} m={r['config']['approx_lsbs']}  MED={r['med']:.6f}  "
                   f"NMED={r['nmed']:.6f}  ER={r['er']:.6f}\n" for r in rows)
    payload = {"rows": rows} if args.all else rows[0]
    return payload, text


# --- image --------------------------------------------------------------------

def _load_inputs(args):
    if args.samples:
        if args.app == "add":
            return samples.cameraman(), samples.coins()
        if args.app == "sub":
            return samples.frame_pair()
        return (samples.astronaut(),)
    if args.in1 is None:
        raise CliError("--in1 is required (or use --samples / --batch)")
    imgs = [read_pnm(args.in1)]
    if args.app != "gray":
        if args.in2 is None:
            raise CliError(f"image {args.app} needs --in2")
        imgs.append(read_pnm(args.in2))
    return tuple(imgs)


def _batch_images(args):
    if args.samples:
        return list((samples.rgb_set() if args.app == "gray" else samples.gray_set()).values())
    suffix = ".ppm" if args.app == "gray" else ".pgm"
    files = sorted(p for p in Path(args.batch).iterdir() if p.suffix.lower() == suffix)
    if not files:
        raise CliError(f"no {suffix} files in {args.batch}")
    return [read_pnm(p) for p in files]


def cmd_image(args):
    config = _config(args)
    kw = {"convention": args.convention} if args.app == "add" else {}
    head = {"cell": config.cell.value, "app": args.app, "scenario": args.scenario, "config": config.to_dict()}
    if args.batch or (args.samples and args.batch_samples):
        mean, count = apps.batch_quality(args.app, _batch_images(args), config, **kw)
        payload = {**head, "batch": True, "runs": count, **mean.to_dict()}
    else:
        result = apps.APPLICATIONS[args.app](*_load_inputs(args), config, **kw)
        q = result.score()
        payload = {**head, "batch": False, "peak": result.peak, **q.to_dict()}
        if args.out:
            write_pnm(args.out, result.output, maxval=1023 if args.app == "add" else 255)
    if args.report:
        Path(args.report).write_text(render_report(["image", args.app], payload))
    psnr = payload["psnr"]
    text = (f"{args.app} {config.cell.value} m={config.approx_lsbs}: PSNR={psnr if isinstance(psnr, str) else f'{psnr:.4f}'} dB  "
            f"SSIM={payload['ssim']:.4f}  MSSIM={payload['mssim']:.4f}"
            + (f"  (mean of {payload['runs']} runs)" if payload["batch"] else "") + "\n")
    return payload, text


# --- fom ----------------------------------------------------------------------

def _merge_metrics(paths: list[str]) -> dict[str, dict]:
    cells: dict[str, dict] = {}
    for path in paths:
        doc = json.loads(Path(path).read_text())
        doc = doc.get("result", doc)
        if "cells" in doc:
            for name, entry in doc["cells"].items():
                cells.setdefault(CellKind.parse(name).value, {}).update(entry)
            continue
        if "cell" not in doc:
            raise CliError(f"{path}: expected a 'cells' mapping or a single-cell report")
        entry = cells.setdefault(CellKind.parse(doc["cell"]).value, {})
        for key in ("energy_nj", "steps", "nmed", "psnr_avg"):
            if key in doc:
                entry[key] = doc[key]
        if "app" in doc:
            entry.setdefault("psnr", {})[doc["app"]] = doc["psnr"]
    return cells


def cmd_fom(args):
    if args.published:
        inputs = {k.value: published_inputs(k) for k in PROPOSED}
    else:
        if not args.metrics:
            raise CliError("give --metrics FILE [FILE ...] or --published")
        inputs = {name: inputs_from_metrics(e) for name, e in sorted(_merge_metrics(args.metrics).items())}
    table = fom_table(inputs)
    text = "cell     FOM1        FOM2\n" + "".join(
        f"{k:<6} {v['fom1']:>10.5f} {v['fom2']:>10.3f}\n" for k, v in table["cells"].items())
    text += f"rank FOM1 (best first): {' < '.join(table['rank_fom1'])}\n"
    text += f"rank FOM2 (best first): {' > '.join(table['rank_fom2'])}\n"
    return table, text


# --- reproduce ----------------------------------------------------------------

def cmd_reproduce(args):
    numbers = sorted(TABLES) if args.all else [args.table]
    checks = _map(reproduce, numbers)
    text = ""
    for c in checks:
        text += f"table {c.table:>2} {c.title}: {'PASS' if c.passed else 'FAIL'} ({len(c.rows)} entries, {c.tolerance})\n"
        for r in c.failures:
            text += f"    {r.key}: expected {r.expected}, got {r.actual}\n"
    payload = {"passed": all(c.passed for c in checks), "tables": [c.to_dict() for c in checks]}
    return payload, text, 0 if payload["passed"] else 1


# --- parser -------------------------------------------------------------------

def _add_config_args(p):
    p.add_argument("--cell", required=True, type=str.upper, choices=CELL_CHOICES)
    p.add_argument("--scenario", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--approx-lsbs", type=int, default=None, help="override the scenario")
    p.add_argument("--n", type=int, default=8, help="adder width")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="imply-afa", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("truthtable", help="print a cell's truth table")
    p.add_argument("cell", help="ICIS1..3, ECIS, EXACT or AFA1..AFA16")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(fn=cmd_truthtable)

    p = sub.add_parser("design", help="generate and filter a candidate family")
    p.add_argument("what", choices=("afa",))
    p.add_argument("--family", choices=("cout-flip", "sum-flip"), default="cout-flip")
    p.set_defaults(fn=cmd_design)

    p = sub.add_parser("simulate", help="run a cell program on one input state")
    p.add_argument("cell", type=str.upper, choices=[k.value for k in PROPOSED])
    p.add_argument("--inputs", required=True, help="ABC bits, e.g. 011")
    p.add_argument("--analog", action="store_true", help="device-level transient instead of logic")
    p.add_argument("--csv", metavar="FILE", help="write the trace / waveform as CSV")
    p.add_argument("--sample-every", type=int, default=100, help="analog CSV decimation (substeps)")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("rca", help="cost figures and optional single addition")
    _add_config_args(p)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--cin", type=int, default=0, choices=(0, 1))
    p.set_defaults(fn=cmd_rca)

    p = sub.add_parser("errors", help="exhaustive MED / NMED / ER")
    p.add_argument("--cell", type=str.upper, choices=CELL_CHOICES, default="ECIS")
    p.add_argument("--scenario", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--approx-lsbs", type=int, default=None)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--all", action="store_true", help="all proposed cells in all scenarios")
    p.set_defaults(fn=cmd_errors)

    p = sub.add_parser("image", help="image addition / motion detection / grayscale")
    p.add_argument("app", choices=("add", "sub", "gray"))
    _add_config_args(p)
    p.add_argument("--in1")
    p.add_argument("--in2")
    p.add_argument("--out")
    p.add_argument("--report", metavar="FILE", help="write the JSON run report here")
    p.add_argument("--batch", metavar="DIR", help="average metrics over every image in DIR")
    p.add_argument("--samples", action="store_true", help="use the bundled test images")
    p.add_argument("--batch-samples", action="store_true", help="with --samples, average over the sample set")
    p.add_argument("--convention", choices=[c.value for c in apps.AddConvention], default="full",
                   help="how 9-bit sums are scored (add only)")
    p.set_defaults(fn=cmd_image)

    p = sub.add_parser("fom", help="figures of merit")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--metrics", nargs="+", metavar="FILE", help="JSON reports from rca/errors/image")
    g.add_argument("--published", action="store_true", help="use the published per-cell figures")
    p.set_defaults(fn=cmd_fom)

    p = sub.add_parser("reproduce", help="regenerate a published table and diff it")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", type=int, choices=sorted(TABLES))
    g.add_argument("--all", action="store_true")
    p.set_defaults(fn=cmd_reproduce)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="print the JSON run report")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"imply-afa: error: {exc}", file=sys.stderr)
        return 2
    payload, text, code = out if len(out) == 3 else (*out, 0)
    if args.json or getattr(args, "format", None) == "json":
        sys.stdout.write(render_report(argv, payload))
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
