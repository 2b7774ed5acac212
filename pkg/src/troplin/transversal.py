"""Transversal matroids: matchings, recognition, set presentations.

Recognition runs two independent tests -- the Moebius/corank counting
conditions on cyclic flats and the quantified rank inequalities over
families of cyclic flats -- and insists they agree.
"""

from itertools import combinations

from .errors import NoBasis, NotTransversal
from .matroid import Matroid
from .util import bits, ksubsets, list1


def _matchable(subset, sets):
    "Can the elements of `subset` be matched injectively into `sets`?"
    owner = [-1] * len(sets)

    def augment(e, seen):
        for i, a in enumerate(sets):
            if seen[i] or not (a >> e) & 1:
                continue
            seen[i] = True
            if owner[i] < 0 or augment(owner[i], seen):
                owner[i] = e
                return True
        return False

    for e in bits(subset):
        if not augment(e, [False] * len(sets)):
            return False
    return True


def transversal_matroid(sets, n):
    "Matroid of partial-transversal supports of the given set system."
    d = len(sets)
    bases = [b for b in ksubsets(n, d) if _matchable(b, sets)]
    if not bases:
        raise NoBasis("no transversal of the full system",
                      witness={"sets": [list1(a) for a in sets]})
    return Matroid(n, bases, check=False)


def _counting_violation(m):
    "Nonnegativity of the corank transform, then the covering counts."
    cf = m.cyclic_flats()
    for f in cf:
        if cf.tau(f) < 0:
            return {"kind": "negative", "flat": list1(f)}
    for f in m.flats():
        total = sum(cf.tau(g) for g in cf if f & g == f)
        if total > m.corank(f):
            return {"kind": "covering", "flat": list1(f)}
    return None


def _rank_violation(m):
    """First cyclic-flat family breaking the alternating rank inequality.

    Families are scanned without repetition, by size then index order,
    over cyclic flats sorted by (size, mask); repetitions never help and
    family size d+1 always suffices.
    """
    cf = list(m.cyclic_flats())
    kmax = min(m.d + 1, len(cf))
    for k in range(1, kmax + 1):
        for fam in combinations(cf, k):
            total = 0
            for i in range(1, k + 1):
                sign = -1 if i % 2 else 1
                for sub in combinations(fam, i):
                    u = 0
                    for f in sub:
                        u |= f
                    total += sign * m.rank(u)
            inter = m.full
            for f in fam:
                inter &= f
            if total > -m.rank(inter):
                return {"family": [list1(f) for f in fam],
                        "value": total, "bound": -m.rank(inter)}
    return None


def is_transversal(m):
    """(True, presentation) or (False, certificate).

    The presentation is the maximal one: the complement of each cyclic
    flat, repeated by its corank-transform multiplicity.  The
    certificate is a violating family of cyclic flats.
    """
    count = _counting_violation(m)
    ranks = _rank_violation(m)
    if (count is None) != (ranks is None):
        raise RuntimeError("transversality tests disagree: %r vs %r"
                           % (count, ranks))
    if ranks is not None:
        return False, ranks
    cf = m.cyclic_flats()
    sets = []
    for f in cf:
        sets.extend([m.full ^ f] * cf.tau(f))
    assert len(sets) == m.d
    return True, sets


def max_presentation(m):
    ok, payload = is_transversal(m)
    if not ok:
        raise NotTransversal("matroid is not transversal", witness=payload)
    return payload


def verify_set_presentation(m, sets):
    """Does the set system present m?  Decided without matchings.

    Complements must be flats whose coclosures realize the corank
    transform multiset, and every subfamily intersection must keep
    corank at least the family size.
    """
    if len(sets) != m.d:
        return False
    comps = [m.full ^ a for a in sets]
    if any(not m.is_flat(f) for f in comps):
        return False
    ok, _ = is_transversal(m)
    if not ok:
        return False
    cf = m.cyclic_flats()
    if sorted(m.coclosure(f) for f in comps) != cf.multiset():
        return False
    for k in range(1, len(comps) + 1):
        for sub in combinations(comps, k):
            inter = m.full
            for f in sub:
                inter &= f
            if m.corank(inter) < k:
                return False
    return True


def is_pseudopresentation(m, flats):
    "Flats whose coclosures realize the corank-transform multiset."
    if len(flats) != m.d:
        return False
    if any(not m.is_flat(f) for f in flats):
        return False
    return sorted(m.coclosure(f) for f in flats) == m.cyclic_flats().multiset()


def beta_solutions(m):
    """All nonnegative flat weightings compatible with the covering counts.

    Weights are forced on cyclic flats and bounded elsewhere; ground
    sets beyond 8 elements are refused since the answer is a full
    enumeration.
    """
    if m.n > 8:
        raise ValueError("enumeration capped at 8 elements")
    ok, cert = is_transversal(m)
    if not ok:
        raise NotTransversal("matroid is not transversal", witness=cert)
    lattice = m.flats()
    order = sorted(lattice, key=lambda f: (-f.bit_count(), f))
    cfset = set(m.cyclic_flats())
    sols = []
    beta = {}

    def rec(i):
        if i == len(order):
            sols.append(dict(beta))
            return
        f = order[i]
        above = sum(b for g, b in beta.items() if g & f == f and g != f)
        slack = m.corank(f) - above
        if slack < 0:
            return
        if f in cfset:
            beta[f] = slack
            rec(i + 1)
            del beta[f]
        else:
            for b in range(slack + 1):
                beta[f] = b
                rec(i + 1)
            del beta[f]

    rec(0)
    if not sols:
        raise NotTransversal("no admissible weighting")
    cf = m.cyclic_flats()
    for sol in sols:
        for f in cf:
            got = sum(b for g, b in sol.items()
                      if b and m.coclosure(g) == f)
            assert got == cf.tau(f)
    return [{f: b for f, b in sol.items() if b} for sol in sols]
