"""Command-line entry point.

Commands print either readable text (``--format human``) or JSON lines
(``--format records``), one object per line with a ``kind`` field.  Results
of the expensive commands are cached as records under ``$GFAN_CACHE_DIR``
(default ``.gfan-cache/``), keyed by a sha256 of the algebra text, the command
and every parameter that affects the output.

Exit status: 0 success, 1 a property or computation failed, 2 bad input.
A negative g needs ``--g=-1,2`` so argparse does not read it as a flag.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import cones as C
from . import presentations as PR
from . import stability as S
from . import tau_tilting as TT
from . import tf_probe as TP
from .algebra import BUILTIN_NAMES, builtin_text, parse_algebra
from .errors import GConesError, InputError

CACHE_ENV = "GFAN_CACHE_DIR"
DEFAULT_CACHE = ".gfan-cache"


# ---------------------------------------------------------------------------
# input helpers

def read_algebra_source(source: str) -> str:
    p = Path(source)
    if p.is_file():
        return p.read_text(encoding="utf-8")
    if source in BUILTIN_NAMES:
        return builtin_text(source)
    raise InputError("no algebra file or builtin named %r" % source)


def parse_g(text: str, n: int) -> tuple:
    try:
        g = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InputError("g must be comma-separated integers, got %r" % text) from None
    if len(g) != n:
        raise InputError("g has %d entries but the algebra has %d vertices" % (len(g), n))
    return g


def parse_grid(text: str) -> tuple:
    """``lo:hi`` box in every coordinate."""
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise InputError("grid must look like lo:hi, got %r" % text) from None
    if lo > hi:
        raise InputError("grid lower bound exceeds upper bound")
    return lo, hi


def parse_plane(text: str) -> tuple:
    """``a,b,c:d`` for the plane a x + b y + c z = d."""
    try:
        nrm, off = text.split(":")
        normal = tuple(float(x) for x in nrm.split(","))
        return normal, float(off)
    except ValueError:
        raise InputError("plane must look like a,b,c:d, got %r" % text) from None


def vec(v) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


def jsonable(x):
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


# ---------------------------------------------------------------------------
# cache

def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE))


def cache_key(alg_text: str, command: str, params: dict) -> str:
    blob = json.dumps({"alg": alg_text, "cmd": command, "params": jsonable(params)}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get(key: str):
    path = cache_dir() / key
    if not path.is_file():
        return None
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)["records"]


def cache_put(key: str, records: list):
    d = cache_dir()
    d.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump({"key": key, "records": records}, fh, sort_keys=True)
    os.replace(tmp, d / key)


# ---------------------------------------------------------------------------
# commands: each returns a list of record dicts

def run_decompose(alg, args) -> list:
    g = parse_g(args.g, alg.n)
    dec = PR.generic_decomposition(alg, g, args.samples, args.seed)
    recs = [{"kind": "decomposition", "g": g, "consensus": dec.consensus,
             "samples_used": dec.samples_used, "method": dec.method}]
    for h, m in dec.summands:
        recs.append({"kind": "summand", "g": h, "multiplicity": m})
    return recs


def run_cone(alg, args) -> list:
    g = parse_g(args.g, alg.n)
    com = TP.cone_of_multiples(alg, g, args.tmax, args.samples, args.seed)
    recs = []
    for t, members in sorted(com.per_t.items()):
        ms = com.per_t_multiset[t]
        recs.append({"kind": "multiple", "t": t,
                     "summands": [[h, ms[h]] for h in sorted(members)]})
    cone = com.stabilized_cone or com.union_cone
    rays = cone.rays if cone.is_pointed else cone.canonical_generators()
    recs.append({"kind": "cone", "g": g, "stabilized_at": com.stabilized_at,
                 "span_dim": cone.span_dim, "pointed": cone.is_pointed, "rays": rays,
                 "simplicial": C.is_simplicial(cone),
                 "rational": all(tuple(C.primitive(r)) == tuple(r) for r in rays),
                 "inclusions_hold": com.inclusions_hold()})
    red = TP.reduced_version(alg, g, args.tmax, args.samples, args.seed)
    recs.append({"kind": "reduced", "reduced": red.reduced, "dropped": red.dropped,
                 "cones_equal": red.cones_equal, "independent": red.independent,
                 "ray_condition_proxy": TP.ray_condition_proxy(alg, g, com=com)})
    return recs


def run_tautilt(alg, args) -> list:
    enum = TT.enumerate_tau_tilting(alg, args.max_pairs, args.max_depth, args.seed)
    recs = [{"kind": "pair", "index": i, "g_vectors": list(p.key)} for i, p in enumerate(enum.pairs)]
    fan = TT.chamber_fan(enum)
    recs.append({"kind": "rays", "rays": sorted(fan.rays)})
    recs.append({"kind": "enumeration", "pairs": len(enum.pairs),
                 "completeness": enum.completeness, "edges": len(enum.edges)})
    return recs


def run_scan(alg, args) -> list:
    lo, hi = parse_grid(args.grid)
    cat = S.build_catalog(alg, q=args.q, dim_cap=args.dim_cap, seed=args.seed)
    recs = [{"kind": "catalog", "members": len(cat.members), "hash": cat.hash,
             "complete": cat.complete}]
    for h in S.box_grid(alg.n, lo, hi):
        sig = S.tf_signature(h, cat)
        w = S.w_space_estimate(h, cat)
        digest = hashlib.sha256(repr(sig.tf_columns).encode()).hexdigest()[:12]
        recs.append({"kind": "point", "theta": h, "w_estimate": w.span,
                     "semistable": len(w.semistable), "tbar": len(sig.tbar()),
                     "fbar": len(sig.fbar()), "signature": digest})
    return recs


COMMANDS = {"decompose": run_decompose, "cone": run_cone, "tautilt": run_tautilt, "scan": run_scan}
PARAMS = {
    "decompose": ("g", "samples", "seed"),
    "cone": ("g", "tmax", "samples", "seed"),
    "tautilt": ("max_pairs", "max_depth", "seed"),
    "scan": ("grid", "dim_cap", "q", "seed"),
}


# ---------------------------------------------------------------------------
# rendering

def human_line(r: dict) -> str:
    k = r["kind"]
    if k == "decomposition":
        return "g = %s  consensus=%s  samples=%d  method=%s" % (
            vec(r["g"]), r["consensus"], r["samples_used"], r["method"])
    if k == "summand":
        return "  %s x%d" % (vec(r["g"]), r["multiplicity"])
    if k == "multiple":
        return "t=%-3d %s" % (r["t"], "  ".join("%s x%d" % (vec(h), m) for h, m in r["summands"]) or "0")
    if k == "cone":
        stab = r["stabilized_at"] if r["stabilized_at"] is not None else "not within ladder"
        return ("stabilized at t=%s  span=%d  simplicial=%s  rational=%s\nrays: %s" % (
            stab, r["span_dim"], r["simplicial"], r["rational"], " ".join(vec(x) for x in r["rays"])))
    if k == "reduced":
        return "reduced version %s  (dropped %s)  independent=%s  ray-condition proxy=%s" % (
            vec(r["reduced"]), " ".join(vec(x) for x in r["dropped"]) or "nothing",
            r["independent"], r["ray_condition_proxy"])
    if k == "pair":
        return "%3d  %s" % (r["index"], " ".join(vec(x) for x in r["g_vectors"]))
    if k == "rays":
        return "rays: " + " ".join(vec(x) for x in r["rays"])
    if k == "enumeration":
        return "%d pairs (%s)" % (r["pairs"], r["completeness"])
    if k == "catalog":
        return "catalog: %d modules  hash=%s%s" % (r["members"], r["hash"],
                                                  "" if r["complete"] else "  (truncated)")
    if k == "point":
        return "%-14s w=%d  semistable=%d  T̄=%d  F̄=%d  sig=%s" % (
            vec(r["theta"]), r["w_estimate"], r["semistable"], r["tbar"], r["fbar"], r["signature"])
    if k == "check":
        return "%s %s%s" % ("PASS" if r["ok"] else "FAIL", r["name"],
                            ("  " + r["detail"]) if r.get("detail") else "")
    if k == "figure":
        return "wrote %s  (%d chambers, %d walls)" % (r["path"], r["chambers"], r["walls"])
    return json.dumps(r, sort_keys=True)


def render(records: list, fmt: str) -> str:
    if fmt == "records":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    return "".join(human_line(r) + "\n" for r in records)


def write_scan_report(records: list, outdir: Path, n: int):
    from .figures import render_scan
    outdir.mkdir(parents=True, exist_ok=True)
    pts = [r for r in records if r["kind"] == "point"]
    with open(outdir / "scan.tsv", "w", encoding="utf-8") as fh:
        fh.write("theta\tw_estimate\tsemistable\ttbar\tfbar\tsignature\n")
        for r in pts:
            fh.write("%s\t%d\t%d\t%d\t%d\t%s\n" % (",".join(map(str, r["theta"])), r["w_estimate"],
                                                 r["semistable"], r["tbar"], r["fbar"], r["signature"]))
    if n == 2:
        render_scan([r["theta"] for r in pts], [r["w_estimate"] for r in pts], outdir / "scan.png")


# ---------------------------------------------------------------------------
# fan-svg and verify are not cached: one writes a file, the other is a check

def run_fan_svg(alg, args) -> list:
    from .figures import render_fan_svg
    normal, offset = parse_plane(args.plane)
    enum = TT.enumerate_tau_tilting(alg, args.max_pairs, args.max_depth, args.seed)
    fan = TT.chamber_fan(enum)
    sl = render_fan_svg(fan, args.out, normal, offset, args.half)
    return [{"kind": "enumeration", "pairs": len(enum.pairs), "completeness": enum.completeness,
             "edges": len(enum.edges)},
            {"kind": "figure", "path": str(args.out), "chambers": len(sl.chambers),
             "walls": len(sl.walls)}]


def _check(name, fn):
    try:
        ok, detail = fn()
    except GConesError as e:
        ok, detail = False, "%s: %s" % (e.code, e)
    return {"kind": "check", "name": name, "ok": bool(ok), "detail": detail}


def verify_suite(alg, seed: int = 0, samples: int = 8) -> list:
    from . import reps as R
    rng = np.random.default_rng(seed)
    n = alg.n

    def structural():
        bad = [v for v in range(1, n + 1)
               for m in (R.projective(alg, v), R.injective(alg, v)) if not m.relations_hold()]
        return not bad, "relations fail on vertices %s" % bad if bad else ""

    def yoneda():
        mods = [R.simple(alg, v) for v in range(1, n + 1)] + [R.injective(alg, v) for v in range(1, n + 1)]
        bad = [m.dims for m in mods for i in range(n) if R.hom_dim(R.projective(alg, i + 1), m) != m.dims[i]]
        return not bad, ""

    def decomposition_sums():
        bad = []
        for _ in range(6):
            g = tuple(int(x) for x in rng.integers(-2, 3, size=n))
            dec = PR.generic_decomposition(alg, g, samples, seed)
            if dec.total() != g:
                bad.append(g)
        return not bad, "sum mismatch at %s" % bad if bad else ""

    def e_rigid_summands():
        bad = []
        for _ in range(4):
            g = tuple(int(x) for x in rng.integers(-2, 3, size=n))
            for h in PR.ind_set(alg, g, samples, seed):
                a = PR.sample_presentation(alg, h, rng)
                if PR.is_tame(alg, h, samples, seed) and PR.e_invariant(a, a):
                    bad.append(h)
        return not bad, "tame summands with e != 0: %s" % bad if bad else ""

    def cones_simplicial():
        bad = []
        for _ in range(4):
            g = tuple(int(x) for x in rng.integers(-2, 3, size=n))
            com = TP.cone_of_multiples(alg, g, 6, samples, seed)
            cone = com.stabilized_cone
            if cone is not None and not C.is_simplicial(cone):
                bad.append(g)
        return not bad, "non-simplicial at %s" % bad if bad else ""

    def fan():
        enum = TT.enumerate_tau_tilting(alg, max_pairs=200, seed=seed)
        if not enum.complete:
            return True, "truncated at %d pairs, coverage not checked" % len(enum.pairs)
        f = TT.chamber_fan(enum)
        cov = TT.fan_covering_check(f, 200, seed)
        return cov == 1.0, "%d pairs, coverage %.3f" % (len(enum.pairs), cov)

    return [_check(name, fn) for name, fn in (
        ("structural", structural), ("yoneda", yoneda), ("decomposition-sums", decomposition_sums),
        ("tame-summands-rigid", e_rigid_summands), ("stabilized-cones-simplicial", cones_simplicial),
        ("fan-coverage", fan))]


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", required=True, help="algebra file or builtin name (%s)" % ", ".join(BUILTIN_NAMES))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=8)
    common.add_argument("--format", choices=("human", "records"), default="human")
    common.add_argument("--no-cache", action="store_true")

    ap = argparse.ArgumentParser(prog="gcones", description="g-vector cones, generic decompositions and tau-tilting fans")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--g", required=True)

    p = sub.add_parser("cone", parents=[common])
    p.add_argument("--g", required=True)
    p.add_argument("--tmax", type=int, default=24)

    for name in ("tautilt", "fan-svg"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--max-pairs", type=int, default=10000)
        p.add_argument("--max-depth", type=int, default=64)
        if name == "fan-svg":
            p.add_argument("--plane", default="1,1,1:1", help="a,b,c:d for a x + b y + c z = d")
            p.add_argument("--half", type=float, default=2.0, help="half-width of the square viewport")
            p.add_argument("--out", default="fan.svg")

    p = sub.add_parser("scan", parents=[common])
    p.add_argument("--grid", default="-2:2", help="lo:hi box in every coordinate")
    p.add_argument("--dim-cap", type=int, default=8)
    p.add_argument("--q", type=int, default=2, choices=(2, 3), help="field size for the module catalog")
    p.add_argument("--report", default=None, help="directory for scan.tsv and scan.png")

    p = sub.add_parser("verify", parents=[common])
    return ap


def execute(args) -> tuple[list, int]:
    text = read_algebra_source(args.algebra)
    alg = parse_algebra(text)
    if args.command in COMMANDS:
        params = {k: getattr(args, k) for k in PARAMS[args.command]}
        if args.command in ("decompose", "cone"):
            params["g"] = parse_g(args.g, alg.n)
        key = cache_key(text, args.command, params)
        recs = None if args.no_cache else cache_get(key)
        if recs is None:
            recs = jsonable(COMMANDS[args.command](alg, args))
            if not args.no_cache:
                cache_put(key, recs)
        if args.command == "scan" and args.report:
            write_scan_report(recs, Path(args.report), alg.n)
        return recs, 0
    if args.command == "fan-svg":
        return jsonable(run_fan_svg(alg, args)), 0
    recs = verify_suite(alg, args.seed, args.samples)
    return recs, 0 if all(r["ok"] for r in recs) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        recs, status = execute(args)
    except InputError as e:
        print("error[%s]: %s" % (e.code, e), file=sys.stderr)
        return 2
    except GConesError as e:
        print("error[%s]: %s" % (e.code, e), file=sys.stderr)
        return 1
    sys.stdout.write(render(recs, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
