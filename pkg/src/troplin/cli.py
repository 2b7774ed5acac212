"""Command line front end: canonical JSON in, canonical JSON out.

Exit codes: 0 for a computed result (or a true predicate), 1 for a
false predicate (a certificate is still printed), 2 for usage or input
errors, reported as {"error": ..., "message": ..., "witness": ...}.
Identical inputs always produce byte-identical outputs.
"""

import argparse
import json
import sys

from . import jsonio
from .errors import PointOutsideL, TroplinError
from .gammoid import digraph_from_presentation, gammoid_valuation
from .presentations import (distinguished, presentation_space_member,
                            sample_presentation, verify_presentation)
from .transversal import (is_transversal, max_presentation,
                          verify_set_presentation)
from .trop import stiefel
from .util import list1, mask_of
from .valuated import (cell_complex, check_pluecker, initial_matroid,
                       membership, stable_intersection, stable_sum,
                       v_contract, v_dual, v_restrict)


def _need(payload, key):
    if not isinstance(payload, dict) or key not in payload:
        raise ValueError("input needs a %r field" % key)
    return payload[key]


def _rows(payload):
    "A matrix, accepted bare or under a 'matrix'/'points' key."
    if isinstance(payload, dict):
        payload = payload.get("matrix", payload.get("points"))
    return jsonio.parse_matrix(payload)


def cmd_stiefel(payload, args):
    return 0, jsonio.fmt_valuated(stiefel(_rows(payload)))


def cmd_check_pluecker(payload, args):
    ok, witness = check_pluecker(jsonio.parse_valuated(payload))
    if ok:
        return 0, {"ok": True}
    return 1, {"ok": False, "witness": witness}


def cmd_underlying(payload, args):
    return 0, jsonio.fmt_matroid(jsonio.parse_valuated(payload).underlying())


def cmd_dual(payload, args):
    return 0, jsonio.fmt_valuated(v_dual(jsonio.parse_valuated(payload)))


def cmd_restrict(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    subset = jsonio.parse_elements(_need(payload, "set"), vm.n)
    return 0, jsonio.fmt_valuated(v_restrict(vm, subset))


def cmd_contract(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    subset = jsonio.parse_elements(_need(payload, "set"), vm.n)
    return 0, jsonio.fmt_valuated(v_contract(vm, subset))


def cmd_initial(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    x = jsonio.parse_point(_need(payload, "point"))
    return 0, jsonio.fmt_matroid(initial_matroid(vm, x))


def cmd_cells(payload, args):
    vm = jsonio.parse_valuated(payload)
    cells = [{"bases": [list1(b) for b in c.matroid.bases],
              "witness": jsonio.fmt_point(c.witness),
              "maximal": c.is_maximal}
             for c in cell_complex(vm)]
    return 0, {"n": vm.n, "rank": vm.d, "cells": cells}


def cmd_vertices(payload, args):
    vm = jsonio.parse_valuated(payload)
    verts = cell_complex(vm).vertices
    out = [{"bases": [list1(b) for b in bases],
            "point": jsonio.fmt_point(p)}
           for bases, p in sorted(verts.items())]
    return 0, {"n": vm.n, "vertices": out}


def cmd_is_transversal_matroid(payload, args):
    m = jsonio.parse_matroid(payload)
    ok, data = is_transversal(m)
    if ok:
        return 0, {"transversal": True,
                   "presentation": jsonio.fmt_sets(m.n, data)}
    return 1, {"transversal": False, "certificate": data}


def cmd_max_presentation(payload, args):
    m = jsonio.parse_matroid(payload)
    return 0, jsonio.fmt_sets(m.n, max_presentation(m))


def cmd_verify_set_presentation(payload, args):
    m = jsonio.parse_matroid(_need(payload, "matroid"))
    sets = [jsonio.parse_elements(s, m.n)
            for s in _need(payload, "sets")]
    ok = verify_set_presentation(m, sets)
    return (0 if ok else 1), {"ok": ok}


def cmd_verify_presentation(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    points = [jsonio.parse_point(p) for p in _need(payload, "points")]
    try:
        report = verify_presentation(vm, points)
    except PointOutsideL as exc:
        return 1, {"ok": False, "violations": [],
                   "outside": exc.witness}
    return (0 if report["ok"] else 1), report


def cmd_distinguished(payload, args):
    vm = jsonio.parse_valuated(payload)
    data = distinguished(vm)
    entries = [{"flat": list1(e.flat),
                "matroid": jsonio.fmt_matroid(e.matroid),
                "coords": [g + 1 for g in e.coords],
                "multiplicity": e.multiplicity,
                "vertex": jsonio.fmt_point(e.vertex),
                "apex": jsonio.fmt_point(e.apex)}
               for e in data.entries]
    apices = [jsonio.fmt_point(a) for a in data.apices()]
    return 0, {"n": data.n, "rank": data.d,
               "entries": entries, "apices": apices}


def cmd_in_presentation_space(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    points = [jsonio.parse_point(p) for p in _need(payload, "points")]
    ok = presentation_space_member(vm, points)
    return (0 if ok else 1), {"ok": ok}


def cmd_sample_presentation(payload, args):
    vm = jsonio.parse_valuated(payload)
    points = sample_presentation(vm, args.seed)
    return 0, {"n": vm.n, "points": jsonio.fmt_matrix(points)}


def cmd_stable_sum(payload, args):
    v1 = jsonio.parse_valuated(_need(payload, "first"))
    v2 = jsonio.parse_valuated(_need(payload, "second"))
    return 0, jsonio.fmt_valuated(stable_sum(v1, v2))


def cmd_stable_intersect(payload, args):
    v1 = jsonio.parse_valuated(_need(payload, "first"))
    v2 = jsonio.parse_valuated(_need(payload, "second"))
    return 0, jsonio.fmt_valuated(stable_intersection(v1, v2))


def cmd_gammoid(payload, args):
    g = jsonio.parse_digraph(payload)
    return 0, jsonio.fmt_valuated(gammoid_valuation(g))


def cmd_digraph_from_presentation(payload, args):
    points = [jsonio.parse_point(p) for p in _need(payload, "points")]
    n = len(points[0])
    basis = None
    sigma = None
    if isinstance(payload, dict) and payload.get("matching") is not None:
        cols = payload["matching"]
        if not isinstance(cols, list) or len(cols) != len(points):
            raise ValueError("matching needs one column per row")
        for c in cols:
            if isinstance(c, bool) or not isinstance(c, int) \
                    or not 1 <= c <= n:
                raise ValueError("matching column out of range")
        sigma = [c - 1 for c in cols]
    if isinstance(payload, dict) and payload.get("basis") is not None:
        basis = jsonio.parse_elements(payload["basis"], n)
    elif sigma is not None:
        basis = mask_of(sigma)
    g = digraph_from_presentation(points, basis, sigma)
    return 0, jsonio.fmt_digraph(g)


def cmd_membership(payload, args):
    vm = jsonio.parse_valuated(_need(payload, "valuation"))
    y = jsonio.parse_point(_need(payload, "point"))
    ok = membership(vm, y)
    return (0 if ok else 1), {"ok": ok}


COMMANDS = {
    "stiefel": cmd_stiefel,
    "check-pluecker": cmd_check_pluecker,
    "underlying": cmd_underlying,
    "dual": cmd_dual,
    "restrict": cmd_restrict,
    "contract": cmd_contract,
    "initial": cmd_initial,
    "cells": cmd_cells,
    "vertices": cmd_vertices,
    "is-transversal-matroid": cmd_is_transversal_matroid,
    "max-presentation": cmd_max_presentation,
    "verify-set-presentation": cmd_verify_set_presentation,
    "verify-presentation": cmd_verify_presentation,
    "distinguished": cmd_distinguished,
    "in-presentation-space": cmd_in_presentation_space,
    "sample-presentation": cmd_sample_presentation,
    "stable-sum": cmd_stable_sum,
    "stable-intersect": cmd_stable_intersect,
    "gammoid": cmd_gammoid,
    "digraph-from-presentation": cmd_digraph_from_presentation,
    "membership": cmd_membership,
}


def _read(path):
    if path == "-":
        return json.loads(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv=None):
    ap = argparse.ArgumentParser(
        prog="troplin",
        description="Exact min-plus computations with valuated matroids. "
                    "All ground-set elements in the JSON formats are "
                    "1-based.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--input", default="-", metavar="FILE",
                    help="input JSON file, or - for stdin (default)")
    ap.add_argument("--output", default="-", metavar="FILE",
                    help="output JSON file, or - for stdout (default)")
    ap.add_argument("--seed", type=int, default=0,
                    help="sampling seed (0 picks the canonical answer)")
    ap.add_argument("--threads", type=int, default=1,
                    help="accepted for interface compatibility; all "
                         "computations are single-threaded")
    ap.add_argument("--pretty", action="store_true",
                    help="indent the output JSON")
    args = ap.parse_args(argv)
    try:
        payload = _read(args.input)
        code, out = COMMANDS[args.command](payload, args)
    except TroplinError as exc:
        out = {"error": type(exc).__name__, "message": str(exc),
               "witness": exc.witness}
        code = 2
    except (ValueError, KeyError, TypeError, OSError) as exc:
        out = {"error": type(exc).__name__, "message": str(exc),
               "witness": None}
        code = 2
    _write(args.output, jsonio.dumps(out, args.pretty))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
