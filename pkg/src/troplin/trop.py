"""Exact min-plus scalars, points and matrices over Q + {inf}.

Scalars are fractions.Fraction or float("inf").  Only addition and
comparison ever touch a scalar, and Fraction degrades to inf exactly
under both, so no rounding can occur anywhere.
"""

from fractions import Fraction

from .errors import AllInfinite, InfiniteBase, OutOfDomain
from .util import bits, ksubsets, list1, mask_of

INF = float("inf")
ZERO = Fraction(0)
ONE = Fraction(1)


def check_point(y):
    y = tuple(y)
    if all(v == INF for v in y):
        raise AllInfinite("point has no finite coordinate")
    return y


def normalize_point(y):
    "Shift so the least finite coordinate is 0."
    y = check_point(y)
    m = min(v for v in y if v != INF)
    return tuple(INF if v == INF else v - m for v in y)


def xsum(x, mask):
    s = ZERO
    for e in bits(mask):
        s += x[e]
    return s


def relsupp(x, y):
    """Relative support of y seen from the finite basepoint x.

    Bitmask of the coordinates where y - x does not attain its minimum
    (infinite coordinates of y always belong).
    """
    if any(v == INF for v in x):
        raise InfiniteBase("basepoint must be finite", witness=list1(
            mask_of(j for j, v in enumerate(x) if v == INF)))
    if len(x) != len(y):
        raise ValueError("length mismatch")
    diffs = [INF if v == INF else v - x[j] for j, v in enumerate(y)]
    m = min(diffs)
    if m == INF:
        raise AllInfinite("point has no finite coordinate")
    return mask_of(j for j, dv in enumerate(diffs) if dv > m)


def zoom(x, y):
    "Replace y by its 0/inf shadow relative to x."
    rs = relsupp(x, y)
    return tuple(INF if (rs >> j) & 1 else ZERO for j in range(len(x)))


def matrix_shape(a):
    d = len(a)
    if d == 0:
        raise ValueError("matrix has no rows")
    n = len(a[0])
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    return d, n


def min_assignment(cost):
    """Exact min-cost perfect matching of a square min-plus matrix.

    Returns (value, match) with match[row] = col, or (INF, None) when
    every system of distinct representatives hits an infinite entry.
    Shortest augmenting paths with Fraction potentials; the Dijkstra
    step is a plain linear scan, which is fine at these sizes.
    """
    k = len(cost)
    if k == 0:
        return ZERO, []
    u = [ZERO] * (k + 1)
    v = [ZERO] * (k + 1)
    p = [0] * (k + 1)  # p[j] = row currently matched to column j (1-based)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, k + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1]
                if cur != INF:
                    cur = cur - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if delta == INF:
                return INF, None
            for j in range(k + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif minv[j] != INF:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    match = [0] * k
    for j in range(1, k + 1):
        match[p[j] - 1] = j - 1
    value = ZERO
    for r, c in enumerate(match):
        value += cost[r][c]
    return value, match


def _as_cols(n, cols):
    if isinstance(cols, int):
        return list(bits(cols))
    return sorted(cols)


def trop_minor(a, cols):
    "Min over permutations of the row sums into the given columns."
    d, n = matrix_shape(a)
    cols = _as_cols(n, cols)
    if len(cols) != d:
        raise ValueError("column set size must equal the row count")
    value, _ = min_assignment([[row[c] for c in cols] for row in a])
    return value


def stiefel_domain_witness(a):
    """None, or (rows, cols) masks of an all-infinite k x (n+1-k) block.

    Such a block exists iff some d-column-set admits no finite matching
    (defect Hall condition); found via one maximum bipartite matching on
    the finite entries followed by an alternating-path reachability scan.
    """
    d, n = matrix_shape(a)
    adj = [[j for j in range(n) if a[i][j] != INF] for i in range(d)]
    owner = [-1] * n

    def augment(i, seen):
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    matched = []
    free = None
    for i in range(d):
        if augment(i, [False] * n):
            matched.append(i)
        else:
            free = i
    if free is None:
        return None
    # Alternating reachability from the exposed row: R = reachable rows,
    # N(R) = reachable columns; every column of N(R) is matched into R,
    # so rows R see only |R| - 1 columns and the complement block is inf.
    rows = {free}
    colseen = set()
    queue = [free]
    while queue:
        i = queue.pop()
        for j in adj[i]:
            if j in colseen:
                continue
            colseen.add(j)
            if owner[j] >= 0 and owner[j] not in rows:
                rows.add(owner[j])
                queue.append(owner[j])
    k = len(rows)
    badcols = [j for j in range(n) if j not in colseen]
    return mask_of(rows), mask_of(badcols[: n + 1 - k])


def stiefel(a):
    "Tropical minors of all d-column-sets, as a valuated matroid."
    from .valuated import ValuatedMatroid

    d, n = matrix_shape(a)
    if d > n:
        raise ValueError("more rows than columns")
    wit = stiefel_domain_witness(a)
    if wit is not None:
        rows, cols = wit
        raise OutOfDomain(
            "matrix carries an all-infinite blocking submatrix",
            witness={"rows": list1(rows), "cols": list1(cols)})
    entries = {}
    for bmask in ksubsets(n, d):
        value, _ = min_assignment(
            [[row[c] for c in bits(bmask)] for row in a])
        entries[bmask] = value
    return ValuatedMatroid(n, d, entries)


def trop_cone_sample(a, coeffs):
    "Min-plus row combination sum_i coeffs[i] + a[i]; raw, not normalized."
    d, n = matrix_shape(a)
    if len(coeffs) != d:
        raise ValueError("need one coefficient per row")
    y = []
    for j in range(n):
        best = INF
        for i in range(d):
            if coeffs[i] == INF or a[i][j] == INF:
                continue
            t = coeffs[i] + a[i][j]
            if t < best:
                best = t
        y.append(best)
    return check_point(y)
