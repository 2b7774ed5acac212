"""Shared builders for the test suite.

Everything returns fresh objects so tests can mutate rows freely.
Ground-set elements are 0-based masks internally; helpers that freeze
expected values comment them in 1-based labels to match the JSON layer.
"""

from fractions import Fraction

from troplin import INF, Matroid, OutOfDomain, ValuatedMatroid, stiefel
from troplin.util import ksubsets, mask_of


def fr(a, b=1):
    return Fraction(a, b)


# 2x4, rank 2: the one bent square, V_34 = 1 and 0 elsewhere.
def rank2_four_rows():
    return [[fr(0), fr(0), fr(0), fr(0)],
            [fr(0), fr(0), fr(1), fr(1)]]


def rank2_four():
    return stiefel(rank2_four_rows())


# 3x5, rank 3: V_123 = 1, V_145 = inf, all other triples 0.
def rank3_five_rows():
    return [[fr(0), fr(0), fr(0), fr(0), fr(0)],
            [fr(1), fr(1), fr(1), fr(0), fr(0)],
            [INF, fr(0), fr(0), INF, INF]]


def rank3_five():
    return stiefel(rank3_five_rows())


# Rank 2 on 6 elements with the three disjoint pairs 12, 34, 56 removed:
# the smallest non-transversal matroid of this shape.
PAIR_MASKS = (mask_of([0, 1]), mask_of([2, 3]), mask_of([4, 5]))


def three_pair_matroid():
    return Matroid(6, [b for b in ksubsets(6, 2) if b not in PAIR_MASKS],
                   check=False)


# Same ground set, all twenty-one pairs present, weight 1 on the three
# disjoint pairs and 0 elsewhere.  Its subdivision has the three-pair
# matroid as a facet.
def three_pair_valuation():
    return ValuatedMatroid(
        6, 2, {b: (fr(1) if b in PAIR_MASKS else fr(0))
               for b in ksubsets(6, 2)})


# A 4x6 presentation of the dual of three_pair_valuation, plus the
# matching of its rows onto the basis {1,2,3,5} that attains V*_{1235}.
def three_pair_dual_rows():
    return [[fr(0), INF, fr(0), INF, fr(0), INF],
            [INF, INF, INF, fr(1), fr(0), fr(0)],
            [INF, INF, fr(0), fr(0), fr(1), INF],
            [fr(0), fr(0), fr(1), INF, INF, INF]]


THREE_PAIR_DUAL_BASIS = mask_of([0, 1, 2, 4])
THREE_PAIR_DUAL_MATCHING = [0, 4, 2, 1]  # row r is matched onto column


def random_rows(rng, d, n, inf_prob=0.0, lo=0, hi=8):
    "Random in-domain d x n matrix with small rational entries."
    while True:
        rows = [[(INF if rng.random() < inf_prob
                  else Fraction(rng.randint(lo, hi), rng.choice((1, 2))))
                 for _ in range(n)] for _ in range(d)]
        try:
            stiefel(rows)
        except OutOfDomain:
            continue
        return rows


def random_valuation(rng, d, n, inf_prob=0.0):
    return stiefel(random_rows(rng, d, n, inf_prob))


def points_of(rows):
    return [tuple(r) for r in rows]
