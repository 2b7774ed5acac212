"""Valuated matroids: exact min-plus Pluecker vectors and their subdivisions.

Entries live on d-subsets of {0..n-1} (as bitmasks) and are normalized so
the least finite entry is 0.  The induced regular subdivision of the basis
polytope is computed exactly: maximal cells by a descent-plus-wall-flip
walk, the full face complex by closing the maximal cells under flat faces.
"""

from .errors import (AllInfinite, EmptyIntersection, EmptySupport,
                     InconsistentCell, InfiniteBase, RankCollapse,
                     TroplinError)
from .matroid import Matroid
from .trop import INF, ONE, ZERO, check_point, xsum
from .util import bits, elems, ksubsets, list1, mask_of, submasks


class ValuatedMatroid:
    """Dense table of min-plus Pluecker coordinates.

    Construction only validates shape and normalizes; the exchange axiom
    on the support is checked by underlying(), the three-term relations
    by check_pluecker().
    """

    def __init__(self, n, d, entries):
        if not 0 <= d <= n:
            raise ValueError("rank out of range")
        from fractions import Fraction

        slots = ksubsets(n, d)
        slotset = set(slots)
        for key in entries:
            if key not in slotset:
                raise ValueError("entry key is not a %d-subset mask" % d)
        table = {}
        for b in slots:
            v = entries.get(b, INF)
            table[b] = INF if v == INF else Fraction(v)
        m = min(table.values())
        if m == INF:
            raise AllInfinite("no finite Pluecker entry")
        if m != ZERO:
            table = {b: (v if v == INF else v - m)
                     for b, v in table.items()}
        self.n = n
        self.d = d
        self.full = (1 << n) - 1
        self.table = table
        self.support = tuple(b for b in slots if table[b] != INF)
        self._underlying = None
        self._maxcells = None
        self._complex = None
        self._vertexcache = {}
        self._rinfcache = {}

    def pl(self, b):
        return self.table[b]

    def underlying(self):
        if self._underlying is None:
            self._underlying = Matroid(self.n, self.support, check=True)
        return self._underlying

    def __eq__(self, other):
        return (isinstance(other, ValuatedMatroid)
                and self.n == other.n and self.d == other.d
                and self.table == other.table)

    def __hash__(self):
        return hash((self.n, self.d, tuple(sorted(self.table.items()))))

    def __repr__(self):
        return "ValuatedMatroid(n=%d, d=%d, %d finite entries)" % (
            self.n, self.d, len(self.support))


class SubdivisionCell:
    def __init__(self, matroid, witness, is_maximal):
        self.matroid = matroid
        self.witness = witness
        self.is_maximal = is_maximal

    def __repr__(self):
        return "SubdivisionCell(%r, maximal=%r)" % (
            self.matroid, self.is_maximal)


class CellComplex:
    "All loop-free cells of the subdivision, with vertices where defined."

    def __init__(self, cells, vertices):
        self.cells = cells
        self.vertices = vertices
        self._bykey = {c.matroid.bases: c for c in cells}

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def find(self, matroid):
        return self._bykey.get(matroid.bases)


def check_pluecker(vm):
    """Three-term exchange over all (d-1, d+1)-set pairs.

    Returns (True, None) or (False, witness) where the witness names the
    first pair whose minimum is finite and attained only once.
    """
    n, d = vm.n, vm.d
    for a in ksubsets(n, d - 1):
        for c in ksubsets(n, d + 1):
            best = INF
            cnt = 0
            for j in bits(c & ~a):
                jb = 1 << j
                left = vm.table[a | jb]
                right = vm.table[c ^ jb]
                t = INF if left == INF or right == INF else left + right
                if t < best:
                    best = t
                    cnt = 1
                elif t == best and t != INF:
                    cnt += 1
            if best != INF and cnt < 2:
                return False, {"a": list1(a), "c": list1(c)}
    return True, None


def membership(vm, y):
    "Does y lie in the tropical linear space cut out by vm?"
    y = check_point(y)
    if len(y) != vm.n:
        raise ValueError("point length mismatch")
    for c in ksubsets(vm.n, vm.d + 1):
        best = INF
        cnt = 0
        for j in bits(c):
            b = c ^ (1 << j)
            if y[j] == INF or vm.table[b] == INF:
                continue
            t = y[j] + vm.table[b]
            if t < best:
                best = t
                cnt = 1
            elif t == best:
                cnt += 1
        if best != INF and cnt < 2:
            return False
    return True


def v_dual(vm):
    full = vm.full
    return ValuatedMatroid(vm.n, vm.n - vm.d,
                           {full ^ b: v for b, v in vm.table.items()})


def v_restrict(vm, subset):
    """Restriction to `subset`, ground set relabelled order-preserving.

    Entries are read off against a fixed complementary basis, so the
    result is independent of that choice after normalization.
    """
    if subset == 0:
        raise RankCollapse("restriction to the empty set")
    uv = vm.underlying()
    k = uv.rank(subset)
    # lex-least independent complement spanning together with `subset`
    chosen = 0
    cur = subset
    for e in elems(vm.full ^ subset):
        if uv.rank(cur | (1 << e)) > uv.rank(cur):
            cur |= 1 << e
            chosen |= 1 << e
    kept = elems(subset)
    pos = {e: i for i, e in enumerate(kept)}
    entries = {}
    for s in submasks(subset, k):
        v = vm.table[s | chosen]
        if v == INF:
            continue
        entries[mask_of(pos[e] for e in bits(s))] = v
    return ValuatedMatroid(len(kept), k, entries)


def v_contract(vm, subset):
    if subset == vm.full:
        raise RankCollapse("contraction of the full ground set")
    if subset == 0:
        return ValuatedMatroid(vm.n, vm.d, dict(vm.table))
    return v_dual(v_restrict(v_dual(vm), vm.full ^ subset))


def _val(vm, b, x):
    v = vm.table[b]
    return INF if v == INF else v - xsum(x, b)


def initial_matroid(vm, x):
    "Bases minimizing pl(B) - x(B); x must be finite."
    x = tuple(x)
    if len(x) != vm.n:
        raise ValueError("point length mismatch")
    if any(v == INF for v in x):
        raise InfiniteBase("initial matroid needs a finite point",
                           witness=list1(mask_of(
                               j for j, v in enumerate(x) if v == INF)))
    best = INF
    keep = []
    for b in vm.support:
        v = vm.table[b] - xsum(x, b)
        if v < best:
            best = v
            keep = [b]
        elif v == best:
            keep.append(b)
    return Matroid(vm.n, keep, check=False)


def _descend_to_maximal(vm, uv, target):
    "Walk from the all-zero point to a point whose cell is maximal."
    n = vm.n
    x = [ZERO] * n
    guard = 0
    while True:
        m = initial_matroid(vm, x)
        comps = m.connected_components()
        if len(comps) == target:
            return m, tuple(x)
        guard += 1
        if guard > len(vm.support) + n:
            raise InconsistentCell("descent failed to converge")
        k = None
        for c in comps:
            for u in uv.connected_components():
                if c & u == c and c != u:
                    k = c
                    break
            if k is not None:
                break
        # k exists: cell components refine support components
        r = (m.bases[0] & k).bit_count()
        m0 = _val(vm, m.bases[0], x)
        tplus = INF
        tminus = INF
        for b in vm.support:
            if b in m.baseset:
                continue
            cnt = (b & k).bit_count()
            gap = _val(vm, b, x) - m0
            if cnt > r:
                tplus = min(tplus, gap / (cnt - r))
            elif cnt < r:
                tminus = min(tminus, gap / (r - cnt))
        step = tplus if tplus != INF else -tminus
        if step == INF or step == -INF:
            raise InconsistentCell("descent found no breakpoint")
        for e in bits(k):
            x[e] += step


def maximal_cells(vm):
    """All maximal cells of the induced subdivision, with witness points.

    Starts from one maximal cell and flips across every interior wall;
    walls of a maximal cell are its faces at proper cyclic flats whose
    component count exceeds the support's by one.
    """
    if vm._maxcells is not None:
        return vm._maxcells
    uv = vm.underlying()
    target = len(uv.connected_components())
    first, x0 = _descend_to_maximal(vm, uv, target)
    cells = {first.bases: SubdivisionCell(first, x0, True)}
    queue = [cells[first.bases]]
    while queue:
        cell = queue.pop()
        m = cell.matroid
        m0 = _val(vm, m.bases[0], cell.witness)
        for f in m.cyclic_flats():
            if f == 0 or f == m.full:
                continue
            w = m.polytope_face(f)
            if len(w.connected_components()) != target + 1:
                continue
            rf = m.rank(f)
            tstar = INF
            for b in vm.support:
                if b in m.baseset:
                    continue
                cnt = (b & f).bit_count()
                if cnt <= rf:
                    continue
                t = (_val(vm, b, cell.witness) - m0) / (cnt - rf)
                if t < tstar:
                    tstar = t
            if tstar == INF:
                continue  # wall sits on the boundary of the support
            x2 = tuple(v + tstar if (f >> e) & 1 else v
                       for e, v in enumerate(cell.witness))
            m2 = initial_matroid(vm, x2)
            if m2.bases in cells:
                continue
            if len(m2.connected_components()) != target:
                raise InconsistentCell(
                    "wall flip did not land on a maximal cell",
                    witness={"flat": list1(f)})
            nc = SubdivisionCell(m2, x2, True)
            cells[m2.bases] = nc
            queue.append(nc)
    out = sorted(cells.values(), key=lambda c: c.matroid.bases)
    vm._maxcells = out
    return out


def face_witness(vm, m, xm, flat):
    """A point whose cell is exactly polytope_face(m, flat).

    xm must be a witness for the cell m; pushing it along the flat
    direction by half the first breakpoint (or by 1 if none) does it.
    """
    w = m.polytope_face(flat)
    if w.bases == m.bases:
        return tuple(xm)
    m0 = _val(vm, m.bases[0], xm)
    rf = m.rank(flat)
    t1 = INF
    for b in vm.support:
        if b in m.baseset:
            continue
        cnt = (b & flat).bit_count()
        if cnt <= rf:
            continue
        t = (_val(vm, b, xm) - m0) / (cnt - rf)
        if t < t1:
            t1 = t
    tw = ONE if t1 == INF else t1 / 2
    return tuple(v + tw if (flat >> e) & 1 else v
                 for e, v in enumerate(xm))


def _cell_witness_lp(vm, keybases):
    "LP: a point whose cell is exactly `keybases`, or None if impossible."
    from .linprog import solve_lp

    n = vm.n
    nv = n + 1  # x coordinates plus the separation gap s
    b0 = keybases[0]
    cons = []
    for b in keybases[1:]:
        coeffs = [ZERO] * nv
        for e in bits(b0):
            coeffs[e] += 1
        for e in bits(b):
            coeffs[e] -= 1
        cons.append((coeffs, "=", vm.table[b0] - vm.table[b]))
    keyset = set(keybases)
    for b in vm.support:
        if b in keyset:
            continue
        coeffs = [ZERO] * nv
        for e in bits(b0):
            coeffs[e] += 1
        for e in bits(b):
            coeffs[e] -= 1
        coeffs[n] = -ONE
        cons.append((coeffs, ">=", vm.table[b0] - vm.table[b]))
    gap = [ZERO] * nv
    gap[n] = ONE
    cons.append((gap, "<=", ONE))
    status, value, x = solve_lp(nv, gap, cons)
    if status != "optimal" or value <= 0:
        return None
    return tuple(x[:n])


def cell_complex(vm):
    """Every loop-free cell of the subdivision (faces included).

    Flat faces of loop-free cells stay loop-free, and every loop-free
    face arises that way, so closing the maximal cells under flat faces
    is enough; a pairwise-intersection audit backs that up.
    """
    if vm._complex is not None:
        return vm._complex
    uv = vm.underlying()
    lp = uv.loops()
    if lp:
        raise TroplinError("cell complex needs a loop-free support",
                           witness=list1(lp))
    target = len(uv.connected_components())
    found = {c.matroid.bases: c for c in maximal_cells(vm)}
    queue = list(found.values())
    while True:
        while queue:
            cell = queue.pop()
            m = cell.matroid
            for f in m.flats():
                if f == 0 or f == m.full:
                    continue
                w = m.polytope_face(f)
                if w.bases == m.bases or w.bases in found:
                    continue
                xw = face_witness(vm, m, cell.witness, f)
                w2 = initial_matroid(vm, xw)
                if w2.bases != w.bases:
                    raise InconsistentCell(
                        "face witness lands in the wrong cell",
                        witness={"flat": list1(f)})
                nc = SubdivisionCell(w, xw, False)
                found[w.bases] = nc
                queue.append(nc)
        # audit: intersections of cells must already be cells
        added = False
        cur = list(found.values())
        for i in range(len(cur)):
            for j in range(i + 1, len(cur)):
                inter = cur[i].matroid.baseset & cur[j].matroid.baseset
                if not inter:
                    continue
                kb = tuple(sorted(inter))
                if kb in found:
                    continue
                xk = _cell_witness_lp(vm, kb)
                if xk is None:
                    raise InconsistentCell(
                        "cell intersection is not a cell",
                        witness={"b1": [list1(b) for b in cur[i].matroid.bases],
                                 "b2": [list1(b) for b in cur[j].matroid.bases]})
                km = Matroid(vm.n, kb, check=False)
                nc = SubdivisionCell(km, xk, False)
                found[kb] = nc
                queue.append(nc)
                added = True
        if not added:
            break
    cells = [c for c in found.values() if not c.matroid.loops()]
    cells.sort(key=lambda c: (not c.is_maximal, c.matroid.bases))
    vertices = {}
    for c in cells:
        if len(c.matroid.connected_components()) == 1:
            vertices[c.matroid.bases] = cell_vertex(vm, c.matroid)
    out = CellComplex(cells, vertices)
    vm._complex = out
    return out


def cell_vertex(vm, m):
    """The point of the tropical linear space pinned down by a connected cell.

    Solves pl(B) - y(B) = const over the cell's bases by propagating
    exchanges; raises InconsistentCell if the system is contradictory or
    underdetermined (i.e. the cell was not connected after all).
    """
    key = m.bases
    hit = vm._vertexcache.get(key)
    if hit is not None:
        return hit
    n = vm.n
    y = [None] * n
    start = next(bits(m.bases[0]))
    y[start] = ZERO
    # edges e -> f with offset pl(B - e + f) - pl(B)
    adj = {e: [] for e in range(n)}
    for b in m.bases:
        for e in bits(b):
            for f in bits(m.full & ~b):
                b2 = (b ^ (1 << e)) | (1 << f)
                if b2 in m.baseset:
                    adj[e].append((f, vm.table[b2] - vm.table[b]))
    queue = [start]
    while queue:
        e = queue.pop()
        for f, off in adj[e]:
            val = y[e] + off
            if y[f] is None:
                y[f] = val
                queue.append(f)
            elif y[f] != val:
                raise InconsistentCell("vertex system is contradictory",
                                       witness={"e": e + 1, "f": f + 1})
    if any(v is None for v in y):
        raise InconsistentCell(
            "vertex system is underdetermined",
            witness=list1(mask_of(j for j, v in enumerate(y) if v is None)))
    c0 = vm.table[m.bases[0]] - xsum(y, m.bases[0])
    for b in m.bases:
        if vm.table[b] - xsum(y, b) != c0:
            raise InconsistentCell("vertex misses a basis",
                                   witness={"b": list1(b)})
    shift = min(y)
    out = tuple(v - shift for v in y)
    vm._vertexcache[key] = out
    return out


def stable_sum(v1, v2):
    "Min-plus convolution of two valuations on the same ground set."
    if v1.n != v2.n:
        raise ValueError("ground sets differ")
    k = v1.d + v2.d
    if k > v1.n:
        raise EmptySupport("ranks add up beyond the ground set")
    entries = {}
    for j in ksubsets(v1.n, k):
        best = INF
        for s in submasks(j, v1.d):
            a = v1.table[s]
            b = v2.table[j ^ s]
            if a == INF or b == INF:
                continue
            t = a + b
            if t < best:
                best = t
        entries[j] = best
    try:
        return ValuatedMatroid(v1.n, k, entries)
    except AllInfinite:
        raise EmptySupport("min-plus sum has empty support")


def stable_intersection(v1, v2):
    "Dual of the min-plus sum of the duals."
    if v1.n != v2.n:
        raise ValueError("ground sets differ")
    n = v1.n
    k = v1.d + v2.d - n
    if k < 0:
        raise EmptyIntersection("ranks do not add up to the ground set")
    full = (1 << n) - 1
    entries = {}
    for j in ksubsets(n, k):
        best = INF
        for s in submasks(full ^ j, v1.d - k):
            a = v1.table[j | s]
            b = v2.table[full ^ s]
            if a == INF or b == INF:
                continue
            t = a + b
            if t < best:
                best = t
        entries[j] = best
    try:
        return ValuatedMatroid(n, k, entries)
    except AllInfinite:
        raise EmptyIntersection("stable intersection is empty")


def hyperplane(apex):
    "Corank-1 valuation whose entry at the complement of {i} is apex[i]."
    apex = check_point(apex)
    n = len(apex)
    full = (1 << n) - 1
    entries = {full ^ (1 << i): apex[i] for i in range(n)
               if apex[i] != INF}
    return ValuatedMatroid(n, n - 1, entries)
