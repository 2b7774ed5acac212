"""Matroids on {0..n-1} with bases stored as bitmasks."""

from .errors import EmptyGroundSet, NoBasis, NotAFlat, NotAMatroid
from .util import bits, elems, ksubsets, list1, mask_of


class Matroid:
    """Matroid given by its list of bases.

    check=True verifies the exchange axiom on construction (quadratic in
    the number of bases, only worth skipping for bases that are valid by
    construction, e.g. minors of an already checked matroid).
    """

    def __init__(self, n, bases, check=True):
        bases = sorted(set(bases))
        if not bases:
            raise NoBasis("need at least one basis")
        d = bases[0].bit_count()
        full = (1 << n) - 1
        for b in bases:
            if b & ~full:
                raise ValueError("basis outside the ground set")
            if b.bit_count() != d:
                raise NotAMatroid("bases of unequal size",
                                  witness={"b1": list1(bases[0]),
                                           "b2": list1(b)})
        self.n = n
        self.d = d
        self.full = full
        self.bases = tuple(bases)
        self.baseset = frozenset(bases)
        self._rank = {}
        self._flats = None
        self._cf = None
        self._comps = None
        if check:
            self._check_exchange()

    def _check_exchange(self):
        bs = self.baseset
        for b1 in self.bases:
            for b2 in self.bases:
                for e in bits(b1 & ~b2):
                    removed = b1 ^ (1 << e)
                    if not any(removed | (1 << f) in bs
                               for f in bits(b2 & ~b1)):
                        raise NotAMatroid(
                            "exchange fails",
                            witness={"b1": list1(b1), "b2": list1(b2),
                                     "e": e + 1})

    def __eq__(self, other):
        return (isinstance(other, Matroid)
                and self.n == other.n and self.bases == other.bases)

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return "Matroid(n=%d, d=%d, %d bases)" % (
            self.n, self.d, len(self.bases))

    def rank(self, subset):
        r = self._rank.get(subset)
        if r is None:
            r = max((b & subset).bit_count() for b in self.bases)
            self._rank[subset] = r
        return r

    def corank(self, subset):
        return self.d - self.rank(subset)

    def closure(self, subset):
        r = self.rank(subset)
        cl = subset
        for e in range(self.n):
            if not (subset >> e) & 1 and self.rank(subset | (1 << e)) == r:
                cl |= 1 << e
        return cl

    def is_flat(self, subset):
        return self.closure(subset) == subset

    def coclosure(self, subset):
        "Largest subset of `subset` with no coloops in the restriction."
        r = self.rank(subset)
        out = 0
        for e in bits(subset):
            if self.rank(subset ^ (1 << e)) == r:
                out |= 1 << e
        return out

    def loops(self):
        union = 0
        for b in self.bases:
            union |= b
        return self.full & ~union

    def coloops(self):
        inter = self.full
        for b in self.bases:
            inter &= b
        return inter

    def is_basis(self, subset):
        return subset in self.baseset

    def independent(self, subset):
        return self.rank(subset) == subset.bit_count()

    def flats(self):
        if self._flats is None:
            found = {self.closure(0)}
            queue = [self.closure(0)]
            while queue:
                f = queue.pop()
                for e in range(self.n):
                    if (f >> e) & 1:
                        continue
                    g = self.closure(f | (1 << e))
                    if g not in found:
                        found.add(g)
                        queue.append(g)
            flist = sorted(found, key=lambda f: (f.bit_count(), f))
            self._flats = FlatLattice(
                self.n, tuple(flist), {f: self.rank(f) for f in flist})
        return self._flats

    def cyclic_flats(self):
        if self._cf is None:
            cf = [f for f in self.flats() if self.coclosure(f) == f]
            self._cf = CyclicFlatData(
                self.d, tuple(cf), {f: self.rank(f) for f in cf})
        return self._cf

    def connected_components(self):
        "Partition of the ground set by direct-sum separators, as masks."
        if self._comps is None:
            comp = {e: self.full for e in range(self.n)}
            for s in range(1, self.full):
                if self.rank(s) + self.rank(self.full ^ s) != self.d:
                    continue
                t = self.full ^ s
                for e in range(self.n):
                    comp[e] &= s if (s >> e) & 1 else t
            self._comps = tuple(sorted(set(comp.values())))
        return self._comps

    def dual(self):
        return Matroid(self.n, [self.full ^ b for b in self.bases],
                       check=False)

    def _relabel(self, newbases, kept):
        kept = elems(kept)
        out = []
        for b in newbases:
            m = 0
            for i, e in enumerate(kept):
                if (b >> e) & 1:
                    m |= 1 << i
            out.append(m)
        return Matroid(len(kept), out, check=False)

    def restrict(self, subset):
        if subset == 0:
            raise EmptyGroundSet("restriction to the empty set")
        r = self.rank(subset)
        newb = {b & subset for b in self.bases
                if (b & subset).bit_count() == r}
        return self._relabel(newb, subset)

    def delete(self, subset):
        return self.restrict(self.full ^ subset)

    def contract(self, subset):
        rest = self.full ^ subset
        if rest == 0:
            raise EmptyGroundSet("contraction of the full ground set")
        # fix the lex-least basis of `subset` so the surviving bases are
        # exactly the bases of the contraction, no union over choices
        bj = 0
        for e in bits(subset):
            if self.rank(bj | (1 << e)) > self.rank(bj):
                bj |= 1 << e
        newb = {b & rest for b in self.bases if b & subset == bj}
        return self._relabel(newb, rest)

    def polytope_face(self, flat):
        "Subdivision-cell face: bases meeting `flat` in full rank."
        if not self.is_flat(flat):
            raise NotAFlat("face needs a flat", witness=list1(flat))
        r = self.rank(flat)
        keep = [b for b in self.bases if (b & flat).bit_count() == r]
        return Matroid(self.n, keep, check=False)


class FlatLattice:
    "Flats sorted by (size, mask), with their ranks."

    def __init__(self, n, flats, rank):
        self.n = n
        self.flats = flats
        self.rank = rank
        self._set = frozenset(flats)

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    def __contains__(self, f):
        return f in self._set

    def covers(self):
        "All covering pairs (f, g) with f < g and nothing between."
        out = []
        for f in self.flats:
            for g in self.flats:
                if f == g or f & g != f:
                    continue
                if any(h != f and h != g and f & h == f and h & g == h
                       for h in self.flats):
                    continue
                out.append((f, g))
        return out


class CyclicFlatData:
    "Cyclic flats with Moebius function and corank transform on their poset."

    def __init__(self, d, flats, rank):
        self.d = d
        self.flats = flats
        self.rank = rank
        self._set = frozenset(flats)
        self._mu = {}

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    def __contains__(self, f):
        return f in self._set

    def cork(self, f):
        return self.d - self.rank[f]

    def mobius(self, f, g):
        if f & g != f:
            return 0
        key = (f, g)
        val = self._mu.get(key)
        if val is None:
            if f == g:
                val = 1
            else:
                val = -sum(self.mobius(f, h) for h in self.flats
                           if f & h == f and h & g == h and h != g)
            self._mu[key] = val
        return val

    def tau(self, f):
        "Moebius-weighted corank sum over cyclic flats above f."
        if f not in self._set:
            from .errors import NotCyclicFlat
            raise NotCyclicFlat(witness=list1(f))
        return sum(self.mobius(f, g) * self.cork(g)
                   for g in self.flats if f & g == f)

    def tau_map(self):
        return {f: self.tau(f) for f in self.flats}

    def multiset(self):
        "Flats with positive tau, repeated tau times, sorted."
        out = []
        for f in self.flats:
            out.extend([f] * self.tau(f))
        out.sort()
        return out


def uniform_matroid(d, n):
    return Matroid(n, ksubsets(n, d), check=False)


def direct_sum(m1, m2):
    shift = m1.n
    bases = [b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(m1.n + m2.n, bases, check=False)
