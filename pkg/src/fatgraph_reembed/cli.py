"""Command-line interface: ``fatgraph-reembed <command> [file] [options]``.

Exit codes: 0 success, 1 a checked condition failed, 2 bad input,
3 an enumeration cap was exceeded (rerun with ``--force`` or ``--cap``).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import caps, selftest
from .counting import p1_stanley, pk_oracle, pk_recurrence
from .embedding import Hypermap, betti, face_count_table, faces_at, parse_file, to_plane_permutation, write_file
from .errors import CapExceeded, ConventionError, InputError
from .perm import CycleType, format_cycles
from .planeperm import diagonal_blocks
from .reembed import (
    count_one_face_embeddings,
    face_disjoint_range,
    local_distribution,
    local_genus_range,
    max_genus_check,
    min_genus_check,
    one_face_lower_bound,
    one_face_probability,
    vertex_localization,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
UNLIMITED = 10**18


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str = ""


class _Out:
    def __init__(self):
        self.lines: list[str] = []
        self.code = EXIT_OK

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def json(self, obj) -> None:
        self.lines.append(json.dumps(obj, indent=2, sort_keys=True))

    def text(self) -> str:
        return "\n".join(self.lines) + "\n" if self.lines else ""


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _load(args) -> Hypermap:
    if not args.file:
        raise InputError(f"command {args.command!r} needs an .emb file")
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_file(text)


def _vertices(args, h: Hypermap) -> list[str]:
    if args.vertex:
        for v in args.vertex:
            h.vertex(v)
        return list(args.vertex)
    return h.vertex_names()


def _cap(args):
    return UNLIMITED if args.force else args.cap


# -- commands --

def cmd_genus(args, out):
    h = _load(args)
    if args.json:
        out.json({"faces": h.num_faces, "genus": h.genus, "vertices": h.num_vertices,
                  "edges": h.num_edges, "betti": betti(h), "map": h.is_map})
    else:
        out(f"faces: {h.num_faces}, genus: {h.genus}")


def cmd_faces(args, out):
    h = _load(args)
    rows = []
    for name in h.vertex_names():
        q, inc = faces_at(h, name)
        rows.append((name, h.degree(name), q))
    if args.json:
        out.json({"faces": [format_cycles_list(f.cycle) for f in h.faces],
                  "vertices": [{"vertex": n, "degree": d, "q": q} for n, d, q in rows]})
        return
    out(f"faces: {h.num_faces}")
    for f in h.faces:
        out(format_cycles_list(f.cycle))
    out("vertex\tdegree\tq")
    for n, d, q in rows:
        out(f"{n}\t{d}\t{q}")


def format_cycles_list(c) -> str:
    return "(" + " ".join(map(str, c)) + ")"


def cmd_localize(args, out):
    h = _load(args)
    payload = []
    for i, name in enumerate(_vertices(args, h)):
        loc = vertex_localization(h, name)
        blocks = diagonal_blocks(to_plane_permutation(h), loc.vertex) if h.num_faces == 1 else []
        payload.append({
            "vertex": name,
            "q": loc.q,
            "d_nu": format_cycles(loc.d_nu),
            "lambda": list(loc.d_nu.cycle_type.parts),
            "two_line": loc.two_line.render().split("\n"),
            "blocks": [str(b) for b in blocks],
        })
        if args.json:
            continue
        if i:
            out()
        out(f"vertex {name}: degree {loc.degree}, q {loc.q}")
        out(loc.two_line.render())
        out(f"D_nu: {format_cycles(loc.d_nu)}  type {loc.d_nu.cycle_type}")
        if blocks:
            out("blocks: " + " ".join(str(b) for b in blocks))
    if args.json:
        out.json(payload)


def cmd_reembed(args, out):
    h = _load(args)
    cap = _cap(args)
    payload = []
    for i, name in enumerate(_vertices(args, h)):
        dist = local_distribution(h, name, method=args.method, cap=cap)
        payload.append(dist.to_json())
        if args.json:
            continue
        if i:
            out()
        out(f"# vertex {name}: degree {dist.degree}, q {dist.q}, lambda(D_nu) {dist.lambda_d_nu}, genus {dist.genus}")
        out("dg\tcount\tgenus")
        for dg, c, g in dist.rows():
            out(f"{dg}\t{c}\t{g}")
        if dist.method == "both":
            out("# oracle and formula agree")
        else:
            out(f"# method: {dist.method}")
    if args.json:
        out.json(payload)


def cmd_range(args, out):
    h = _load(args)
    names = _vertices(args, h)
    rows = [(n, *local_genus_range(h, n)) for n in names]
    joint = face_disjoint_range(h, names) if args.vertex and len(names) > 1 else None
    g = h.genus
    if args.json:
        obj = {"genus": g, "vertices": [{"vertex": n, "min": lo, "max": hi} for n, lo, hi in rows]}
        if joint:
            obj["joint"] = {"min": joint[0], "max": joint[1]}
        out.json(obj)
        return
    out("vertex\tdg_min\tdg_max\tgenus_min\tgenus_max")
    for n, lo, hi in rows:
        out(f"{n}\t{lo}\t{hi}\t{g + lo}\t{g + hi}")
    if joint:
        out(f"joint\t{joint[0]}\t{joint[1]}\t{g + joint[0]}\t{g + joint[1]}")


def _report(report, out, args):
    if args.json:
        out.json({
            "kind": report.kind,
            "passed": report.passed,
            "vertices": [r.__dict__ for r in report.rows],
        })
    elif report.kind == "min":
        out("vertex\tdegree\tq\tell\tell+q\tdeg+1\tresult")
        for r in report.rows:
            out(f"{r.vertex}\t{r.degree}\t{r.q}\t{r.ell}\t{r.ell + r.q}\t{r.degree + 1}\t{'pass' if r.passed else 'FAIL'}")
        if report.passed:
            out("necessary condition for minimum genus satisfied")
        else:
            why = "; ".join(f"vertex {r.vertex}: {r.ell}+{r.q} ≠ {r.degree + 1}" for r in report.failures)
            out(f"NOT minimum genus ({why})")
    else:
        out("vertex\tdegree\tq\tresult")
        for r in report.rows:
            out(f"{r.vertex}\t{r.degree}\t{r.q}\t{'pass' if r.passed else 'FAIL'}")
        if report.passed:
            out("necessary condition for maximum genus satisfied")
        else:
            why = "; ".join(f"vertex {r.vertex}: q={r.q} > 2" for r in report.failures)
            out(f"NOT maximum genus ({why})")
    if not report.passed:
        out.code = EXIT_FAILED


def cmd_check_min_genus(args, out):
    _report(min_genus_check(_load(args)), out, args)


def cmd_check_max_genus(args, out):
    _report(max_genus_check(_load(args)), out, args)


def cmd_count_pk(args, out):
    if not args.lam:
        raise InputError("count-pk needs --lambda, e.g. --lambda 3,1")
    lam = CycleType.parse(args.lam)
    method = args.method
    cap = UNLIMITED if args.force else args.cap
    if method is None:
        method = "both" if lam.n <= min(caps.pk_cap(cap), caps.PK_CAP) else "formula"
    if method == "formula":
        table = pk_recurrence(lam)
    elif method == "oracle":
        table = pk_oracle(lam, cap)
    else:
        table = pk_recurrence(lam)
        oracle = pk_oracle(lam, cap)
        if oracle != table:
            raise ConventionError(f"recurrence {table.counts} != oracle {oracle.counts}")
        if p1_stanley(lam) != table[1]:
            raise ConventionError(f"Stanley {p1_stanley(lam)} != p_1 {table[1]}")
    table.check()
    if args.json:
        out.json({"lambda": list(lam.parts), "n": lam.n, "method": method,
                  "counts": {str(k): str(v) for k, v in table.items}})
        return
    out.lines.extend(table.to_tsv().splitlines())
    if method == "both":
        out("# oracle, recurrence and Stanley agree")
    else:
        out(f"# method: {method}")


def cmd_oneface_bound(args, out):
    h = _load(args)
    bound = one_face_lower_bound(h)
    obj = {"bound": _frac(bound)}
    try:
        cnt = count_one_face_embeddings(h, cap=_cap(args))
    except CapExceeded:
        if args.cap is not None:
            raise
        cnt = None
    if cnt is not None:
        obj.update(one_face=str(cnt.count), embeddings=str(cnt.total),
                   probability=_frac(cnt.probability), m=cnt.high_degree_vertices)
    local = []
    if h.num_faces == 1:
        for name in h.vertex_names():
            p = one_face_probability(h, name)
            local.append({"vertex": name, "degree": p.degree, "r_nu": str(p.r_nu),
                          "probability": _frac(p.probability), "lower": _frac(p.zagier_lower),
                          "upper": _frac(p.zagier_upper), "universal": _frac(p.universal)})
        obj["vertices"] = local
    if args.json:
        out.json(obj)
        return
    out(f"lower bound on P(one face): {obj['bound']}")
    if cnt is not None:
        out(f"one-face embeddings: {cnt.count} of {cnt.total} (probability {obj['probability']})")
        if cnt.count:
            out(f"at least 2^{cnt.high_degree_vertices} = {2 ** cnt.high_degree_vertices} required: ok")
    else:
        out("# exhaustive count skipped: too many embeddings (use --force)")
    if local:
        out("vertex\tdegree\tR_nu\tprob\tlower\tupper\t2/(d+2)")
        for r in local:
            out(f"{r['vertex']}\t{r['degree']}\t{r['r_nu']}\t{r['probability']}\t{r['lower']}\t{r['upper']}\t{r['universal']}")


def cmd_enumerate(args, out):
    h = _load(args)
    table = face_count_table(h, cap=_cap(args))
    chi = h.num_edges + h.num_vertices + table - h.n
    genera = ((2 - chi) // 2).reshape(-1)
    dist: dict[int, int] = {}
    for g in genera.tolist():
        dist[g] = dist.get(g, 0) + 1
    if args.json:
        out.json({"embeddings": str(int(table.size)), "genus": {str(g): str(c) for g, c in sorted(dist.items())}})
        return
    out("genus\tcount")
    for g, c in sorted(dist.items()):
        out(f"{g}\t{c}")
    out(f"# {table.size} embeddings")


def cmd_write(args, out):
    out.lines.extend(write_file(_load(args)).splitlines())


def cmd_selftest(args, out):
    results = selftest.run(full=args.full)
    if args.json:
        out.json([{"check": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures[:20]} for r in results])
    else:
        for r in results:
            out(r.line())
            for f in r.failures[:20]:
                out(f"  {f}")
    if not all(r.passed for r in results):
        out.code = EXIT_FAILED


COMMANDS = {
    "genus": cmd_genus,
    "faces": cmd_faces,
    "localize": cmd_localize,
    "reembed": cmd_reembed,
    "range": cmd_range,
    "check-min-genus": cmd_check_min_genus,
    "check-max-genus": cmd_check_max_genus,
    "count-pk": cmd_count_pk,
    "oneface-bound": cmd_oneface_bound,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
    "write": cmd_write,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fatgraph-reembed", description="Local genus analysis of graph embeddings.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file", nargs="?", help=".emb embedding file")
    p.add_argument("--vertex", action="append", help="vertex name (repeatable)")
    p.add_argument("--lambda", dest="lam", metavar="P1,P2,...", help="cycle type, e.g. 3,1")
    p.add_argument("--method", choices=("formula", "oracle", "both"))
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--cap", type=int, help="override the enumeration cap")
    p.add_argument("--force", action="store_true", help="ignore enumeration caps")
    p.add_argument("--full", action="store_true", help="selftest: larger exhaustive range")
    return p


def run(argv=None) -> CommandResult:
    out = _Out()
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args, out)
    except InputError as exc:
        return CommandResult(EXIT_INPUT, out.text(), f"error: {exc}\n")
    except CapExceeded as exc:
        return CommandResult(EXIT_CAP, out.text(), f"cap exceeded: {exc} (use --force or --cap)\n")
    except ConventionError as exc:
        return CommandResult(EXIT_FAILED, out.text(), f"internal consistency check failed: {exc}\n")
    return CommandResult(out.code, out.text())


def main(argv=None) -> int:
    res = run(argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
