"""JSON (de)serialization for the CLI formats.

Scalars travel as strings: "inf", or a rational in lowest terms like
"3", "-7/2".  Bare JSON numbers are accepted on input (floats go
through their decimal representation, so 0.1 means 1/10).  Ground-set
elements are 1-based everywhere; subsets are sorted element lists and
d-subset table keys are comma-joined ("1,3,4").
"""

import json
from fractions import Fraction

from .gammoid import WeightedDigraph
from .matroid import Matroid
from .trop import INF
from .util import ksubsets, list1
from .valuated import ValuatedMatroid


def parse_scalar(v):
    if isinstance(v, str):
        s = v.strip()
        if s == "inf":
            return INF
        return Fraction(s)
    if isinstance(v, bool):
        raise ValueError("not a scalar: %r" % (v,))
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        if v == INF:
            return INF
        return Fraction(str(v))
    raise ValueError("not a scalar: %r" % (v,))


def fmt_scalar(v):
    return "inf" if v == INF else str(Fraction(v))


def parse_point(obj):
    if not isinstance(obj, (list, tuple)) or not obj:
        raise ValueError("point must be a nonempty list")
    return tuple(parse_scalar(v) for v in obj)


def fmt_point(p):
    return [fmt_scalar(v) for v in p]


def parse_matrix(obj):
    if not isinstance(obj, (list, tuple)) or not obj:
        raise ValueError("matrix must be a nonempty list of rows")
    rows = [parse_point(r) for r in obj]
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def fmt_matrix(a):
    return [fmt_point(r) for r in a]


def parse_elements(obj, n):
    "1-based element list -> bitmask."
    if not isinstance(obj, (list, tuple)):
        raise ValueError("subset must be a list of 1-based elements")
    mask = 0
    for e in obj:
        if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= n:
            raise ValueError("element %r out of range 1..%d" % (e, n))
        bit = 1 << (e - 1)
        if mask & bit:
            raise ValueError("repeated element %d" % e)
        mask |= bit
    return mask


def key_to_mask(key, n):
    if not isinstance(key, str):
        raise ValueError("entry key must be a string")
    parts = [p for p in key.split(",") if p.strip()]
    return parse_elements([int(p) for p in parts], n)


def mask_to_key(mask):
    return ",".join(str(e) for e in list1(mask))


def _get_n(obj):
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
        raise ValueError("need a positive integer n")
    return n


def parse_matroid(obj):
    n = _get_n(obj)
    if not isinstance(obj.get("bases"), list):
        raise ValueError("matroid needs a list of bases")
    bases = [parse_elements(b, n) for b in obj["bases"]]
    m = Matroid(n, bases, check=True)
    if "rank" in obj and m.d != obj["rank"]:
        raise ValueError("rank field disagrees with the bases")
    return m


def fmt_matroid(m):
    return {"n": m.n, "rank": m.d, "bases": [list1(b) for b in m.bases]}


def parse_valuated(obj):
    n = _get_n(obj)
    d = obj.get("rank")
    if isinstance(d, bool) or not isinstance(d, int):
        raise ValueError("valuation needs an integer rank")
    table = obj.get("entries")
    if not isinstance(table, dict):
        raise ValueError("valuation needs an entries table")
    entries = {}
    for key, val in table.items():
        mask = key_to_mask(key, n)
        if mask.bit_count() != d:
            raise ValueError("entry key %r is not a %d-subset" % (key, d))
        entries[mask] = parse_scalar(val)
    # missing keys mean inf, so sparse input needs no special casing
    return ValuatedMatroid(n, d, entries)


def fmt_valuated(vm):
    entries = {mask_to_key(b): fmt_scalar(vm.table[b])
               for b in ksubsets(vm.n, vm.d)}
    return {"n": vm.n, "rank": vm.d, "entries": entries, "sparse": False}


def parse_sets(obj):
    n = _get_n(obj)
    if not isinstance(obj.get("sets"), list):
        raise ValueError("set system needs a list of sets")
    return n, [parse_elements(s, n) for s in obj["sets"]]


def fmt_sets(n, sets):
    return {"n": n, "sets": [list1(s) for s in sets]}


def parse_digraph(obj):
    n = _get_n(obj)
    sinks = parse_elements(obj.get("sinks", []), n)
    weights = {}
    for edge in obj.get("edges", []):
        if not isinstance(edge, dict):
            raise ValueError("edge must be an object")
        i, j = edge.get("from"), edge.get("to")
        for v in (i, j):
            if isinstance(v, bool) or not isinstance(v, int) \
                    or not 1 <= v <= n:
                raise ValueError("edge endpoint %r out of range" % (v,))
        if (i - 1, j - 1) in weights:
            raise ValueError("duplicate edge %d -> %d" % (i, j))
        weights[(i - 1, j - 1)] = parse_scalar(edge.get("w", 0))
    return WeightedDigraph(n, sinks, weights)


def fmt_digraph(g):
    edges = [{"from": i + 1, "to": j + 1, "w": fmt_scalar(w)}
             for (i, j), w in sorted(g.edges.items())]
    return {"n": g.n, "sinks": list1(g.sinks), "edges": edges}


def dumps(obj, pretty=False):
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
