"""Tiny exact two-phase simplex over Fractions.

Problems here have a handful of free rational variables, so each one is
split into a difference of nonnegatives and everything runs under
Bland's rule (no cycling, no floats, no tolerance knobs).
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _pivot(tab, obj, basis, r, c):
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [v - f * w for v, w in zip(row, tab[r])]
    if obj[c] != 0:
        f = obj[c]
        for j, w in enumerate(tab[r]):
            obj[j] -= f * w
    basis[r] = c


def _run(tab, obj, basis, ncols):
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(tab, obj, basis, leave, enter)


def solve_lp(num_vars, objective, constraints):
    """Maximize objective . x over free rational x subject to constraints.

    constraints: iterable of (coeffs, rel, rhs) with rel in "<=", ">=",
    "=".  Returns (status, value, x) where status is "optimal",
    "infeasible" or "unbounded"; value and x are None unless optimal.
    """
    rows = []
    for coeffs, rel, rhs in constraints:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rel == ">=":
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = "<="
        elif rel not in ("<=", "="):
            raise ValueError("bad relation %r" % (rel,))
        rows.append((coeffs, rel, rhs))

    nslack = sum(1 for _, rel, _ in rows if rel == "<=")
    nreal = 2 * num_vars + nslack
    m = len(rows)
    ncols = nreal + m  # one artificial per row
    tab = []
    si = 0
    for k, (coeffs, rel, rhs) in enumerate(rows):
        row = [ZERO] * (ncols + 1)
        for j, c in enumerate(coeffs):
            row[2 * j] = c
            row[2 * j + 1] = -c
        if rel == "<=":
            row[2 * num_vars + si] = ONE
            si += 1
        row[-1] = rhs
        if rhs < 0:
            row = [-v for v in row]
        row[nreal + k] = ONE
        tab.append(row)
    basis = [nreal + k for k in range(m)]

    # phase 1: maximize minus the artificial sum
    obj = [ZERO] * (ncols + 1)
    for k in range(m):
        obj[nreal + k] = ONE
    for row in tab:
        for j in range(ncols + 1):
            obj[j] -= row[j]
    for k in range(m):
        obj[nreal + k] = ZERO
    _run(tab, obj, basis, ncols)
    if obj[-1] < 0:
        return "infeasible", None, None

    # drive leftover artificials out of the basis, drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] < nreal:
            keep.append(i)
            continue
        piv = next((j for j in range(nreal) if tab[i][j] != 0), None)
        if piv is not None:
            _pivot(tab, obj, basis, i, piv)
            keep.append(i)
    tab = [tab[i][:nreal] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    obj = [ZERO] * (nreal + 1)
    for j, c in enumerate(objective):
        obj[2 * j] = -Fraction(c)
        obj[2 * j + 1] = Fraction(c)
    for i, b in enumerate(basis):
        if obj[b] != 0:
            f = obj[b]
            for j, w in enumerate(tab[i]):
                obj[j] -= f * w
    status = _run(tab, obj, basis, nreal)
    if status != "optimal":
        return status, None, None
    vals = [ZERO] * nreal
    for i, b in enumerate(basis):
        vals[b] = tab[i][-1]
    x = [vals[2 * j] - vals[2 * j + 1] for j in range(num_vars)]
    return "optimal", obj[-1], x
