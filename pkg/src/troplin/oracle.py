"""Brute-force reference implementations used to cross-check the fast paths.

Everything here trades time for obviousness: permutple enumeration instead
of augmenting paths, point sampling instead of wall flips, full multiset
scans instead of Moebius counting.  Sizes are capped accordingly.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .errors import NoBasis, OutOfDomain
from .matroid import Matroid
from .trop import INF, ZERO
from .util import bits, elems, ksubsets
from .valuated import ValuatedMatroid, initial_matroid, maximal_cells


def trop_minor_bruteforce(a, cols):
    "Min over explicit permutations; rows capped at 6."
    if isinstance(cols, int):
        cols = elems(cols)
    else:
        cols = sorted(cols)
    d = len(a)
    if d > 6:
        raise ValueError("enumeration capped at 6 rows")
    if len(cols) != d:
        raise ValueError("column set size must equal the row count")
    best = INF
    for perm in permutations(cols):
        total = ZERO
        for i in range(d):
            v = a[i][perm[i]]
            if v == INF:
                total = INF
                break
            total += v
        if total < best:
            best = total
    return best


def stiefel_bruteforce(a):
    d, n = len(a), len(a[0])
    entries = {}
    any_finite = False
    for b in ksubsets(n, d):
        v = trop_minor_bruteforce(a, b)
        entries[b] = v
        if v != INF:
            any_finite = True
    if not any_finite:
        raise OutOfDomain("every maximal minor is infinite")
    return ValuatedMatroid(n, d, entries)


def subdivision_sample(vm, trials=2000, seed=0):
    """Audit maximal_cells by exact point sampling.

    Checks that each claimed cell is genuinely the cell of its witness
    and has the right component count, that claimed cells only overlap
    in proper faces, and that cell barycenters plus `trials` random
    convex combinations of support vertices are all covered by some
    claimed cell (polymatroid membership, checked subset by subset).
    Raises AssertionError on any failure; returns the set of claimed
    matroids hit by samples (always all of them, via the barycenters).
    """
    uv = vm.underlying()
    target = len(uv.connected_components())
    claimed = maximal_cells(vm)
    n = vm.n
    for cell in claimed:
        again = initial_matroid(vm, cell.witness)
        assert again.bases == cell.matroid.bases, "witness mismatch"
        assert len(cell.matroid.connected_components()) == target, \
            "claimed cell is not maximal"
    for i in range(len(claimed)):
        for j in range(i + 1, len(claimed)):
            inter = claimed[i].matroid.baseset & claimed[j].matroid.baseset
            if inter:
                km = Matroid(n, sorted(inter), check=False)
                assert len(km.connected_components()) > target, \
                    "claimed cells overlap beyond a proper face"
    tables = []
    for cell in claimed:
        m = cell.matroid
        tables.append([m.rank(s) for s in range(1 << n)])
    pts = []
    for cell in claimed:
        bs = cell.matroid.bases
        cnt = [0] * n
        for b in bs:
            for e in bits(b):
                cnt[e] += 1
        pts.append([Fraction(c, len(bs)) for c in cnt])
    rng = random.Random(seed)
    support = list(vm.support)
    for _ in range(trials):
        k = rng.randint(1, min(6, len(support)))
        chosen = rng.sample(support, k)
        wts = [rng.randint(1, 9) for _ in chosen]
        tot = sum(wts)
        x = [ZERO] * n
        for b, wt in zip(chosen, wts):
            f = Fraction(wt, tot)
            for e in bits(b):
                x[e] += f
        pts.append(x)
    hits = set()
    for x in pts:
        sums = [ZERO] * (1 << n)
        for s in range(1, 1 << n):
            low = s & -s
            sums[s] = sums[s ^ low] + x[low.bit_length() - 1]
        covered = False
        for idx, table in enumerate(tables):
            ok = True
            for s in range(1, 1 << n):
                if sums[s] > table[s]:
                    ok = False
                    break
            if ok:
                hits.add(idx)
                covered = True
        if not covered:
            raise AssertionError("sample point not covered: %r" % (x,))
    return {claimed[i].matroid for i in hits}


def presentations_exhaustive(m):
    """All set system presentations of m, by trying every multiset.

    Presentation sets never contain loops (a matched element is
    independent), so candidates range over nonempty subsets of the
    non-loops.  Ground sets beyond 5 elements are refused.
    """
    from .transversal import transversal_matroid

    if m.n > 5:
        raise ValueError("exhaustive search capped at 5 elements")
    nonloops = m.full ^ m.loops()
    subsets = [s for s in range(1, m.full + 1) if s & ~nonloops == 0]
    out = []
    for fam in combinations_with_replacement(subsets, m.d):
        try:
            t = transversal_matroid(list(fam), m.n)
        except NoBasis:
            continue
        if t.bases == m.bases:
            out.append(tuple(fam))
    return out


def linking_bruteforce(g, subset):
    "Min-weight vertex-disjoint path system by explicit search; n <= 7."
    if g.n > 7:
        raise ValueError("enumeration capped at 7 vertices")
    if subset.bit_count() != g.sinks.bit_count():
        raise ValueError("need a subset the size of the sink set")
    srcs = elems(subset)
    adj = {v: [] for v in range(g.n)}
    for (i, j), w in g.edges.items():
        adj[i].append((j, w))
    best = [INF]

    def rec(i, used, total):
        if i == len(srcs):
            if total < best[0]:
                best[0] = total
            return
        s = srcs[i]
        if (used >> s) & 1:
            return

        def walk(v, pathmask, acc):
            if (g.sinks >> v) & 1:
                rec(i + 1, used | pathmask, total + acc)
            for u, w in adj[v]:
                if ((used | pathmask) >> u) & 1:
                    continue
                walk(u, pathmask | (1 << u), acc + w)

        walk(s, 1 << s, ZERO)

    rec(0, 0, ZERO)
    return best[0]


def rinf_facet_oracle(vm, m, flat, z):
    """Escape-region membership by interval arithmetic, for wall cells only.

    When the face cell at `flat` has exactly two components its region
    is a line, so each potential escape coordinate reduces to comparing
    one rational interval; no simplex involved.  Returns None when the
    face has more components (oracle not applicable).
    """
    from .presentations import _locate_cell
    from .trop import xsum
    from .valuated import face_witness

    if all(z[j] == INF for j in bits(flat)):
        return True
    w = m.polytope_face(flat)
    comps = w.connected_components()
    if len(comps) != 2:
        return None
    cell = _locate_cell(vm, m)
    xw = face_witness(vm, m, cell.witness, flat)
    k1 = comps[0]
    r1 = w.rank(k1)
    m0 = vm.table[w.bases[0]] - xsum(xw, w.bases[0])
    lo, hi = None, None  # open interval of the region parameter
    for b in vm.support:
        if b in w.baseset:
            continue
        aa = (b & k1).bit_count() - r1
        gap = vm.table[b] - xsum(xw, b) - m0
        if aa > 0:
            t = gap / aa
            if hi is None or t < hi:
                hi = t
        elif aa < 0:
            t = gap / aa
            if lo is None or t > lo:
                lo = t
    assert lo is None or lo < 0
    assert hi is None or hi > 0
    for j in bits(flat):
        if z[j] == INF:
            continue
        jlo, jhi = None, None
        feasible = True
        for k in range(vm.n):
            if k == j or z[k] == INF:
                continue
            bound = (z[k] - z[j]) - (xw[k] - xw[j])
            coeff = ((k1 >> k) & 1) - ((k1 >> j) & 1)
            if coeff == 0:
                if bound < 0:
                    feasible = False
                    break
            elif coeff > 0:
                if jhi is None or bound < jhi:
                    jhi = bound
            else:
                if jlo is None or -bound > jlo:
                    jlo = -bound
        if not feasible:
            continue
        glo = lo if jlo is None else (jlo if lo is None else max(lo, jlo))
        ghi = hi if jhi is None else (jhi if hi is None else min(hi, jhi))
        # escape needs t with lo < t < hi, jlo <= t <= jhi
        if glo is None or ghi is None:
            return False
        if glo < ghi:
            return False
        if glo == ghi:
            closed_lo = jlo is not None and glo == jlo and (
                lo is None or lo < glo)
            closed_hi = jhi is not None and ghi == jhi and (
                hi is None or hi > ghi)
            if closed_lo and closed_hi:
                return False
    return True


def cell_complex_bruteforce(vm):
    """All loop-free cells, by closing the maximal ones under every
    subset-direction face (not just flats).  Returns a set of basis
    tuples."""
    seen = {c.matroid.bases for c in maximal_cells(vm)}
    queue = list(seen)
    while queue:
        bases = queue.pop()
        m = Matroid(vm.n, bases, check=False)
        for s in range(1, vm.full):
            r = m.rank(s)
            keep = tuple(b for b in bases if (b & s).bit_count() == r)
            if keep == bases or keep in seen:
                continue
            km = Matroid(vm.n, keep, check=False)
            if km.loops():
                continue  # loopy faces only beget loopy faces
            seen.add(keep)
            queue.append(keep)
    return seen
