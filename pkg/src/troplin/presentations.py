"""Presentations of valuated matroids: regions, apices, the presentation space.

A presentation is a d-tuple of points of the tropical linear space whose
min-plus row span recovers the valuation.  The verifier counts points in
escape regions against coranks of flats; the distinguished apices are the
vertices of connected maximal cells of the contractions at cyclic flats.
"""

import random
from fractions import Fraction

from .errors import (AllInfinite, CellNotFound, CountMismatch,
                     NotCyclicFlat, NotTransversalFacets, PointOutsideL,
                     TroplinError, WrongArity)
from .linprog import solve_lp
from .matroid import Matroid
from .trop import INF, ONE, ZERO, check_point, relsupp, xsum
from .util import bits, elems, list1, mask_of
from .valuated import (ValuatedMatroid, cell_complex, cell_vertex,
                       face_witness, initial_matroid, maximal_cells,
                       membership, v_contract)
from . import transversal


def r0_member(vm, flat, x, z):
    "Is z a point of the space whose relative support from x covers `flat`?"
    if not membership(vm, z):
        return False
    return relsupp(x, z) & flat == flat


def _locate_cell(vm, m):
    "Witness point for the subdivision cell m, trying maximal cells first."
    for cell in maximal_cells(vm):
        if cell.matroid.bases == m.bases:
            return cell
    hit = cell_complex(vm).find(m)
    if hit is None:
        raise CellNotFound("matroid is not a cell of the subdivision",
                           witness=[list1(b) for b in m.bases])
    return hit


def _rinf_context(vm, m, flat):
    "Static data for the escape-region LP: the wall cell and its region."
    key = (m.bases, flat)
    hit = vm._rinfcache.get(key)
    if hit is not None:
        return hit
    cell = _locate_cell(vm, m)
    w = m.polytope_face(flat)
    xw = face_witness(vm, m, cell.witness, flat)
    comps = w.connected_components()
    c = len(comps)
    where = {}
    for i, k in enumerate(comps):
        for e in bits(k):
            where[e] = i
    ranks = [w.rank(k) for k in comps]
    m0 = vm.table[w.bases[0]] - xsum(xw, w.bases[0])
    # variables t_0..t_{c-2} (component shifts, last one gauged to 0), s
    region = []
    for b in vm.support:
        if b in w.baseset:
            continue
        coeffs = [ZERO] * c
        for i in range(c - 1):
            coeffs[i] = Fraction((b & comps[i]).bit_count() - ranks[i])
        coeffs[c - 1] = ONE
        gap = vm.table[b] - xsum(xw, b) - m0
        region.append((coeffs, "<=", gap))
    cap = [ZERO] * c
    cap[c - 1] = ONE
    region.append((cap, "<=", ONE))
    hit = (xw, where, c, region, cap)
    vm._rinfcache[key] = hit
    return hit


def rinf_member(vm, m, flat, z):
    """Is z inside the escape region of `flat` seen from everywhere on the
    cell's stretch of the space?

    Decided by one small exact LP per finite coordinate of z on the flat:
    z escapes iff some such coordinate can attain the minimum of z - y
    for a y interior to the cell of polytope_face(m, flat).
    """
    cf = m.cyclic_flats()
    if flat not in cf:
        raise NotCyclicFlat(witness=list1(flat))
    z = check_point(z)
    if len(z) != vm.n:
        raise ValueError("point length mismatch")
    if all(z[j] == INF for j in bits(flat)):
        return True
    xw, where, c, region, cap = _rinf_context(vm, m, flat)
    nv = c
    goal = cap
    for j in bits(flat):
        if z[j] == INF:
            continue
        cons = list(region)
        bad = False
        for k in range(vm.n):
            if k == j or z[k] == INF:
                continue
            coeffs = [ZERO] * nv
            ck, cj = where[k], where[j]
            if ck < c - 1:
                coeffs[ck] += 1
            if cj < c - 1:
                coeffs[cj] -= 1
            rhs = (z[k] - z[j]) - (xw[k] - xw[j])
            if ck == cj and rhs < 0:
                bad = True
                break
            cons.append((coeffs, "<=", rhs))
        if bad:
            continue
        status, value, _ = solve_lp(nv, goal, cons)
        if status == "optimal" and value > 0:
            return False
    return True


def verify_presentation(vm, points):
    """Check the point-counting conditions that characterize presentations.

    For every connected maximal cell, with vertex v: at most cork(F)
    points may have relative support from v covering the flat F, and for
    cyclic F the escape-region count must equal cork(F) exactly.
    Returns {"ok": bool, "violations": [...]}.
    """
    if len(points) != vm.d:
        raise WrongArity(witness={"expected": vm.d, "got": len(points)})
    uv = vm.underlying()
    bad = uv.loops() | uv.coloops()
    if bad:
        raise TroplinError("support must be loop- and coloop-free",
                           witness=list1(bad))
    points = [check_point(p) for p in points]
    for i, p in enumerate(points):
        if len(p) != vm.n:
            raise ValueError("point length mismatch")
        if not membership(vm, p):
            raise PointOutsideL(witness={"index": i + 1})
    violations = []
    for cell in maximal_cells(vm):
        m = cell.matroid
        if len(m.connected_components()) != 1:
            continue
        v = cell_vertex(vm, m)
        supports = [relsupp(v, p) for p in points]
        for f in m.flats():
            count = sum(1 for rs in supports if rs & f == f)
            if count > m.corank(f):
                violations.append(
                    {"cell": [list1(b) for b in m.bases],
                     "flat": list1(f), "kind": "sigma0",
                     "count": count, "bound": m.corank(f)})
        for f in m.cyclic_flats():
            count = sum(1 for p in points if rinf_member(vm, m, f, p))
            if count != m.corank(f):
                violations.append(
                    {"cell": [list1(b) for b in m.bases],
                     "flat": list1(f), "kind": "sigmainf",
                     "count": count, "bound": m.corank(f)})
    return {"ok": not violations, "violations": violations}


def has_transversal_facets(vm):
    "Are all maximal cells transversal matroids?"
    for cell in maximal_cells(vm):
        ok, _ = transversal.is_transversal(cell.matroid)
        if not ok:
            return False
    return True


def is_transversal_valuated(vm):
    "A valuated matroid is transversal iff all its maximal cells are."
    return has_transversal_facets(vm)


class DistinguishedEntry:
    """One distinguished matroid with its apex.

    flat: cyclic flat of the support (global mask); matroid: connected
    maximal cell of the contraction, on the remaining elements; coords:
    global labels of those elements; multiplicity: how many presentation
    points it accounts for; apex: its vertex, extended by inf on flat.
    """

    def __init__(self, flat, matroid, coords, multiplicity, vertex, apex):
        self.flat = flat
        self.matroid = matroid
        self.coords = coords
        self.multiplicity = multiplicity
        self.vertex = vertex
        self.apex = apex

    def __repr__(self):
        return "DistinguishedEntry(flat=%r, mult=%d, %r)" % (
            list1(self.flat), self.multiplicity, self.matroid)


class DistinguishedData:
    def __init__(self, n, d, entries):
        self.n = n
        self.d = d
        self.entries = entries

    def apices(self):
        "The apex multiset, one copy per unit of multiplicity."
        out = []
        for e in self.entries:
            out.extend([e.apex] * e.multiplicity)
        return out

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def distinguished(vm):
    """All distinguished matroids of the valuation, with apices.

    Scans the cyclic flats F of the support; for each, the connected
    maximal cells M of the contraction at F with positive empty-flat
    multiplicity contribute, their apices being their vertices extended
    by inf on F.  Multiplicities always sum to the rank.
    """
    uv = vm.underlying()
    bad = uv.loops() | uv.coloops()
    if bad:
        raise TroplinError("support must be loop- and coloop-free",
                           witness=list1(bad))
    for cell in maximal_cells(vm):
        ok, cert = transversal.is_transversal(cell.matroid)
        if not ok:
            raise NotTransversalFacets(
                "a maximal cell is not transversal",
                witness={"cell": [list1(b) for b in cell.matroid.bases],
                         "certificate": cert})
    entries = []
    for f in uv.cyclic_flats():
        if f == uv.full:
            continue
        if f == 0:
            vf = vm
            coords = tuple(range(vm.n))
        else:
            vf = v_contract(vm, f)
            coords = tuple(elems(vm.full ^ f))
        for cell in maximal_cells(vf):
            m = cell.matroid
            if len(m.connected_components()) != 1:
                continue
            t = m.cyclic_flats().tau(0)
            if t <= 0:
                continue
            v = cell_vertex(vf, m)
            apex = [INF] * vm.n
            for i, g in enumerate(coords):
                apex[g] = v[i]
            entries.append(DistinguishedEntry(
                f, m, coords, t, v, tuple(apex)))
    total = sum(e.multiplicity for e in entries)
    if total != vm.d:
        raise TroplinError("apex multiplicities do not sum to the rank",
                           witness={"total": total, "rank": vm.d})
    entries.sort(key=lambda e: (e.flat, e.matroid.bases))
    return DistinguishedData(vm.n, vm.d, entries)


def presentation_fan_member(m, points):
    """Do these points fill the free slots of a presentation of m?

    There are tau(empty) slots; each point's relative support from the
    origin must be an independent flat, and the supports' complements
    together with the maximal presentation of the other cyclic flats
    must satisfy the set-presentation conditions.
    """
    cf = m.cyclic_flats()
    t = cf.tau(0)
    if len(points) != t:
        raise WrongArity(witness={"expected": t, "got": len(points)})
    vm0 = ValuatedMatroid(m.n, m.d, {b: ZERO for b in m.bases})
    zero = (ZERO,) * m.n
    sets = []
    for p in points:
        try:
            p = check_point(p)
        except AllInfinite:
            return False
        if len(p) != m.n:
            raise ValueError("point length mismatch")
        if not membership(vm0, p):
            return False
        g = relsupp(zero, p)
        if not m.independent(g) or not m.is_flat(g):
            return False
        sets.append(m.full ^ g)
    for f in cf:
        if f == 0:
            continue
        sets.extend([m.full ^ f] * cf.tau(f))
    return transversal.verify_set_presentation(m, sets)


def presentation_space_member(vm, points):
    """Is the tuple of points a presentation, decided by the apex geometry?

    Some assignment of the points to the distinguished entries (respecting
    multiplicities) must restrict-and-translate into each entry's fan.
    """
    if len(points) != vm.d:
        raise WrongArity(witness={"expected": vm.d, "got": len(points)})
    points = [check_point(p) for p in points]
    for p in points:
        if len(p) != vm.n:
            raise ValueError("point length mismatch")
    data = distinguished(vm)
    entries = data.entries
    infmask = [mask_of(j for j in range(vm.n) if p[j] == INF)
               for p in points]
    compat = []
    for p, im in zip(points, infmask):
        ok = [i for i, e in enumerate(entries) if e.flat & ~im == 0]
        if not ok:
            return False
        compat.append(ok)

    def localize(e, p):
        return tuple(INF if p[g] == INF else p[g] - e.vertex[i]
                     for i, g in enumerate(e.coords))

    from itertools import combinations

    def assign(i, remaining):
        if i == len(entries):
            return True
        e = entries[i]
        cand = [j for j in remaining if i in compat[j]]
        if len(cand) < e.multiplicity:
            return False
        for group in combinations(cand, e.multiplicity):
            local = tuple(localize(e, points[j]) for j in group)
            try:
                ok = presentation_fan_member(e.matroid, local)
            except (AllInfinite, ValueError):
                ok = False
            if ok and assign(i + 1, remaining - set(group)):
                return True
        return False

    return assign(0, frozenset(range(len(points))))


def sample_presentation(vm, seed=0):
    """A presentation of vm: the apices for seed 0, a jittered one else.

    Jitter moves each point away from its apex along a random independent
    flat of its cell; candidates are rejection-tested, falling back to
    the apices, and the result is always re-verified against vm.
    """
    from .trop import stiefel

    data = distinguished(vm)
    points = None
    if seed:
        rng = random.Random(seed)
        for _ in range(25):
            trial = []
            for e in data.entries:
                lattice = e.matroid.flats()
                indep = [f for f in lattice
                         if e.matroid.independent(f)]
                for _ in range(e.multiplicity):
                    g = rng.choice(indep)
                    c = Fraction(rng.randint(1, 6), rng.randint(1, 4))
                    p = list(e.apex)
                    for i, gl in enumerate(e.coords):
                        if (g >> i) & 1:
                            p[gl] = e.apex[gl] + c
                    trial.append(tuple(p))
            if presentation_space_member(vm, trial):
                points = trial
                break
    if points is None:
        points = data.apices()
    if stiefel(points) != vm:
        raise TroplinError("sampled rows do not span the valuation")
    return points


def contract_presentation(vm, points, flat):
    """Select the points infinite on a cyclic flat and project them off it.

    The selected count must be the corank of the flat; the projections
    present the contraction.
    """
    uv = vm.underlying()
    if flat not in uv.cyclic_flats():
        raise NotCyclicFlat(witness=list1(flat))
    if len(points) != vm.d:
        raise WrongArity(witness={"expected": vm.d, "got": len(points)})
    points = [check_point(p) for p in points]
    keep = elems(vm.full ^ flat)
    chosen = [p for p in points
              if all(p[j] == INF for j in bits(flat))]
    want = vm.d - uv.rank(flat)
    if len(chosen) != want:
        raise CountMismatch(witness={"expected": want,
                                     "got": len(chosen)})
    return [tuple(p[g] for g in keep) for p in chosen]
