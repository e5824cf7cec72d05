"""``surfcat <surface.json> <command>``.

Exit status: 0 on success, 2 for bad input, 1 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus, render
from .cotorsion import (Painting, boundary_sets, cotorsion_pairs, pair_of_painting,
                        painting_of_pair, rotate_painting, t_structures)
from .curves import ClosedCurve
from .cutting import Cut
from .errors import SurfcatError, Unsupported
from .homext import ext1_dim
from .intersect import intersection_number
from .workspace import SpecError, Workspace, curve_literal, load

COMMANDS = ("ext", "int", "cotorsion", "tstructures", "rotate", "render", "verify")
RENDER_WHAT = ("triangulation", "painting", "surface")


class CheckFailed(Exception):
    """An internal consistency check did not hold."""


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _name_of(ws: Workspace, c) -> str | None:
    for name, d in ws.curves.items():
        if d == c:
            return name
    if not isinstance(c, ClosedCurve) and c.arc is not None:
        return c.T.arc_names[c.arc]
    return None


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _two_curves(ws: Workspace, args):
    names = args.curve or []
    if not 1 <= len(names) <= 2:
        raise SpecError("give one or two --curve names")
    if len(names) == 1:
        names = names * 2
    return names, [ws.curve(n) for n in names]


def _parse_black(text: str | None, m: int) -> frozenset:
    if not text:
        return frozenset()
    try:
        J = frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise SpecError(f"--black expects comma-separated piece numbers, got {text!r}") from None
    bad = [j for j in J if not 1 <= j <= m]
    if bad:
        raise SpecError(f"piece numbers must lie in 1..{m}, got {sorted(bad)}")
    return J


def _core(ws: Workspace, args) -> list:
    if not args.core:
        raise SpecError("--core NAME is required")
    return ws.collection(args.core)


def _piece_rows(cut: Cut) -> list[dict]:
    return [{"index": p.index, "genus": p.genus, "boundaries": list(p.boundary_sizes),
             "disk": p.is_disk} for p in cut.pieces]


def _piece_line(row: dict) -> str:
    kind = " disk" if row["disk"] else ""
    return f"component {row['index']}: genus={row['genus']} boundaries={row['boundaries']}{kind}"


# ---------------------------------------------------------------- commands

def cmd_ext(ws: Workspace, args) -> int:
    names, (g, d) = _two_curves(ws, args)
    if isinstance(g, ClosedCurve) or isinstance(d, ClosedCurve):
        raise Unsupported("band Ext out of scope")
    e = ext1_dim(g, d)
    n = intersection_number(g, d)
    ok = e == n
    _emit(args, {"curves": names, "ext": e, "int": n, "agree": ok},
          [f"ext={e} int={n} {'ok' if ok else 'MISMATCH'}"])
    if not ok:
        raise CheckFailed(f"ext and int disagree on {names}")
    return 0


def cmd_int(ws: Workspace, args) -> int:
    names, (g, d) = _two_curves(ws, args)
    if isinstance(g, ClosedCurve) or isinstance(d, ClosedCurve):
        raise Unsupported("intersection numbers of closed curves are not computed")
    n = intersection_number(g, d)
    _emit(args, {"curves": names, "int": n}, [f"int={n}"])
    return 0


def cmd_cotorsion(ws: Workspace, args) -> int:
    I = _core(ws, args)
    cut = Cut(ws.T, I)
    pairs = cotorsion_pairs(ws.T, I, cut)
    rows = [{"J": sorted(p.black), "Jc": sorted(p.white)} for p in pairs]
    pieces = _piece_rows(cut)
    lines = [f"m={cut.m}", *(_piece_line(r) for r in pieces), f"pairs={len(pairs)}"]
    lines += [f"J={_fmt_set(r['J'])} Jc={_fmt_set(r['Jc'])}" for r in rows]
    _emit(args, {"core": args.core, "m": cut.m, "components": pieces, "pairs": rows}, lines)
    return 0


def cmd_tstructures(ws: Workspace, args) -> int:
    pairs = t_structures(ws.T)
    rows = []
    for p in pairs:
        left, right = boundary_sets(p)
        if left & right:
            raise CheckFailed("a t-structure shares a boundary between its sides")
        rows.append({"J": sorted(p.black), "Jc": sorted(p.white),
                     "left_boundaries": sorted(left), "right_boundaries": sorted(right)})
    lines = [f"t-structures={len(rows)}"]
    lines += [f"J={_fmt_set(r['J'])} Jc={_fmt_set(r['Jc'])} "
              f"left={_fmt_set(r['left_boundaries'])} right={_fmt_set(r['right_boundaries'])}"
              for r in rows]
    _emit(args, {"count": len(rows), "t_structures": rows}, lines)
    return 0


def _painting(ws: Workspace, args) -> Painting:
    cut = Cut(ws.T, _core(ws, args))
    J = _parse_black(args.black, cut.m)
    return Painting(cut, tuple("black" if j in J else "white" for j in range(1, cut.m + 1)))


def cmd_rotate(ws: Workspace, args) -> int:
    before = _painting(ws, args)
    D = [ws.curve(n.strip()) for n in (args.d or "").split(",") if n.strip()]
    after = rotate_painting(before, D)
    pair = pair_of_painting(after)
    if painting_of_pair(pair) != after:
        raise CheckFailed("painting does not survive the round trip through its pair")
    core = [{"name": _name_of(ws, c), "curve": curve_literal(c)} for c in after.core]
    pieces = _piece_rows(after.cut)
    lines = ["rotated core:"]
    lines += [f"  {r['name'] or '-'} {json.dumps(r['curve'], sort_keys=True)}" for r in core]
    lines += [f"m={after.cut.m} black={_fmt_set(after.black)}"]
    lines += [f"{_piece_line(r)} {after.colours[r['index'] - 1]}" for r in pieces]
    _emit(args, {"core": core, "m": after.cut.m, "black": sorted(after.black),
                 "components": pieces, "colours": list(after.colours)}, lines)
    if args.svg:
        _write(args.svg, render.render_pair(before, after))
    return 0


def cmd_render(ws: Workspace, args) -> int:
    what = args.what or "triangulation"
    if what not in RENDER_WHAT:
        raise SpecError(f"render target must be one of {', '.join(RENDER_WHAT)}")
    if what == "surface":
        svg = render.render_surface(ws.surface)
    elif what == "triangulation":
        svg = render.render_triangulation(ws.T)
    else:
        svg = render.render_painting(_painting(ws, args))
    if args.svg:
        _write(args.svg, svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_verify(ws: Workspace, args) -> int:
    max_len = args.max_len if args.max_len is not None else (8 if args.corpus else 4)
    results = [corpus.sweep_triangulation("input", ws.T, max_len)]
    if args.corpus:
        results += corpus.sweep(max_len)
    n_t = len(t_structures(ws.T))
    expect_t = 2 ** ws.surface.n_components
    rows = [{"surface": r.name, "curves": r.curves, "pairs": r.pairs,
             "mismatches": len(r.mismatches)} for r in results]
    lines = [f"{r['surface']}: curves={r['curves']} pairs={r['pairs']} "
             f"mismatches={r['mismatches']}" for r in rows]
    lines.append(f"t-structures={n_t} expected={expect_t}")
    ok = all(r.ok for r in results) and n_t == expect_t
    lines.append("ok" if ok else "FAILED")
    _emit(args, {"sweeps": rows, "t_structures": n_t, "ok": ok}, lines)
    if not ok:
        raise CheckFailed("verification failed")
    return 0


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise SpecError(f"cannot write {path}: {e.strerror}") from None


HANDLERS = {"ext": cmd_ext, "int": cmd_int, "cotorsion": cmd_cotorsion,
            "tstructures": cmd_tstructures, "rotate": cmd_rotate,
            "render": cmd_render, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="surfcat",
                                 description="Curves, Ext groups and cotorsion pairs "
                                             "of marked surfaces.")
    ap.add_argument("surface", help="surface file (JSON)")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("what", nargs="?", help="render target: " + ", ".join(RENDER_WHAT))
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--svg", metavar="PATH", help="write an SVG picture")
    ap.add_argument("--curve", action="append", metavar="NAME", help="curve name (repeatable)")
    ap.add_argument("--core", metavar="NAME", help="rigid collection name")
    ap.add_argument("--black", metavar="I,J", help="black pieces of a painting")
    ap.add_argument("--d", metavar="NAMES", help="comma-separated core curves kept fixed")
    ap.add_argument("--max-len", type=int, metavar="N", help="verify: longest crossing word")
    ap.add_argument("--corpus", action="store_true", help="verify: also sweep the reference surfaces")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ws = load(args.surface)
        return HANDLERS[args.command](ws, args)
    except Unsupported as e:
        print(f"unsupported: {e}")
        return 2
    except SurfcatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CheckFailed as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except Exception as e:  # noqa: BLE001 - anything else is a bug
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
