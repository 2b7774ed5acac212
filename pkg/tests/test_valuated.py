import random
from fractions import Fraction

import pytest

from common import (fr, rank2_four, rank2_four_rows, rank3_five,
                    random_valuation, three_pair_valuation)
from troplin import (INF, AllInfinite, EmptyIntersection, EmptySupport,
                     InconsistentCell, InfiniteBase, Matroid, NotAMatroid,
                     ValuatedMatroid, cell_complex, cell_vertex,
                     check_pluecker, hyperplane, initial_matroid,
                     maximal_cells, membership, stable_intersection,
                     stable_sum, stiefel, trop_cone_sample, uniform_matroid,
                     v_contract, v_dual, v_restrict)
from troplin.oracle import cell_complex_bruteforce, subdivision_sample
from troplin.util import bits, elems, ksubsets, mask_of, submasks


def cell_without_34():
    return Matroid(4, [b for b in ksubsets(4, 2) if b != mask_of([2, 3])],
                   check=False)


def cell_without_12():
    return Matroid(4, [b for b in ksubsets(4, 2) if b != mask_of([0, 1])],
                   check=False)


def test_constructor_coerces_and_normalizes():
    v = ValuatedMatroid(3, 2, {mask_of([0, 1]): 5, mask_of([0, 2]): 7})
    assert v.table[mask_of([0, 1])] == 0
    assert v.table[mask_of([0, 2])] == 2
    assert isinstance(v.table[mask_of([0, 2])], Fraction)
    assert v.table[mask_of([1, 2])] == INF


def test_constructor_rejects_bad_keys_and_empty():
    with pytest.raises(ValueError):
        ValuatedMatroid(3, 2, {mask_of([0]): 0})
    with pytest.raises(AllInfinite):
        ValuatedMatroid(3, 2, {})
    with pytest.raises(AllInfinite):
        ValuatedMatroid(3, 2, {mask_of([0, 1]): INF})


def test_equality_is_projective():
    a = ValuatedMatroid(3, 2, {mask_of([0, 1]): 1, mask_of([0, 2]): 3})
    b = ValuatedMatroid(3, 2, {mask_of([0, 1]): 0, mask_of([0, 2]): 2})
    assert a == b and hash(a) == hash(b)


def test_underlying_requires_exchange():
    v = ValuatedMatroid(4, 2, {mask_of([0, 1]): 0, mask_of([2, 3]): 0})
    with pytest.raises(NotAMatroid):
        v.underlying()


def test_check_pluecker_golden_failure():
    bad = ValuatedMatroid(4, 2, {b: (0 if b == mask_of([0, 1]) else 1)
                                 for b in ksubsets(4, 2)})
    ok, wit = check_pluecker(bad)
    assert not ok
    assert wit == {"a": [1], "c": [2, 3, 4]}


def test_check_pluecker_accepts_examples_and_images():
    assert check_pluecker(rank2_four()) == (True, None)
    assert check_pluecker(rank3_five()) == (True, None)
    assert check_pluecker(three_pair_valuation()) == (True, None)
    rng = random.Random(5150)
    for _ in range(20):
        d = rng.randint(1, 3)
        v = random_valuation(rng, d, rng.randint(d + 1, 6), inf_prob=0.2)
        assert check_pluecker(v) == (True, None)


def test_membership_golden():
    v = rank2_four()
    assert membership(v, (fr(0), fr(0), fr(0), fr(0)))
    assert membership(v, (fr(0), fr(0), fr(1), fr(1)))
    assert not membership(v, (fr(0), fr(1), fr(1), fr(1)))
    assert membership(v, (INF, fr(0), fr(0), fr(0)))
    with pytest.raises(AllInfinite):
        membership(v, (INF, INF, INF, INF))


def test_initial_matroid_golden():
    v = rank2_four()
    assert initial_matroid(v, (fr(0),) * 4) == cell_without_34()
    assert initial_matroid(v, (fr(0), fr(0), fr(1), fr(1))) == cell_without_12()
    with pytest.raises(InfiniteBase):
        initial_matroid(v, (fr(0), INF, fr(0), fr(0)))


def test_maximal_cells_rank2_four():
    cells = maximal_cells(rank2_four())
    got = {c.matroid for c in cells}
    assert got == {cell_without_34(), cell_without_12()}
    for c in cells:
        assert c.is_maximal
        assert initial_matroid(rank2_four(), c.witness) == c.matroid


def test_maximal_cells_rank3_five():
    v = rank3_five()
    cells = maximal_cells(v)
    wanted_a = Matroid(5, [b for b in ksubsets(5, 3)
                           if b not in (mask_of([0, 1, 2]),
                                        mask_of([0, 3, 4]))], check=False)
    wanted_b = Matroid(5, [b for b in ksubsets(5, 3)
                           if b & mask_of([3, 4]) != mask_of([3, 4])],
                       check=False)
    assert {c.matroid for c in cells} == {wanted_a, wanted_b}
    for c in cells:
        assert initial_matroid(v, c.witness) == c.matroid


def test_cell_complex_rank2_four():
    v = rank2_four()
    cc = cell_complex(v)
    assert len(cc.cells) == 7
    maximal = [c for c in cc.cells if c.is_maximal]
    assert {c.matroid for c in maximal} == {cell_without_34(), cell_without_12()}
    square = Matroid(4, [mask_of([0, 2]), mask_of([1, 2]),
                         mask_of([0, 3]), mask_of([1, 3])], check=False)
    assert cc.find(square) is not None
    triangles = [c for c in cc.cells
                 if not c.is_maximal and len(c.matroid.bases) == 3]
    assert len(triangles) == 4
    assert cc.find(uniform_matroid(2, 4)) is None


def test_cell_vertices_rank2_four():
    v = rank2_four()
    cc = cell_complex(v)
    assert cc.vertices == {
        tuple(sorted(cell_without_34().bases)): (fr(0), fr(0), fr(0), fr(0)),
        tuple(sorted(cell_without_12().bases)): (fr(0), fr(0), fr(1), fr(1)),
    }
    assert cell_vertex(v, cell_without_12()) == (fr(0), fr(0), fr(1), fr(1))


def test_cell_vertex_underdetermined_on_disconnected_cells():
    v = rank2_four()
    square = Matroid(4, [mask_of([0, 2]), mask_of([1, 2]),
                         mask_of([0, 3]), mask_of([1, 3])], check=False)
    with pytest.raises(InconsistentCell) as err:
        cell_vertex(v, square)
    assert err.value.witness == [3, 4]


def test_cell_vertex_contradictory_on_non_cells():
    with pytest.raises(InconsistentCell):
        cell_vertex(rank2_four(), uniform_matroid(2, 4))


def test_cell_complex_matches_bruteforce():
    rng = random.Random(31415)
    pool = [rank2_four(), rank3_five()]
    while len(pool) < 8:
        d = rng.randint(1, 3)
        v = random_valuation(rng, d, rng.randint(d + 1, 5), inf_prob=0.25)
        if not v.underlying().loops():
            pool.append(v)
    for v in pool:
        got = {c.matroid.bases for c in cell_complex(v).cells}
        assert got == cell_complex_bruteforce(v)


def test_subdivision_sampler_agrees():
    v = rank2_four()
    hits = subdivision_sample(v, trials=300, seed=11)
    assert hits == {c.matroid for c in maximal_cells(v)}


def test_dual_involution_and_rank():
    pool = [rank2_four(), rank3_five(), three_pair_valuation()]
    rng = random.Random(88)
    for _ in range(10):
        d = rng.randint(1, 3)
        pool.append(random_valuation(rng, d, rng.randint(d + 1, 6),
                                     inf_prob=0.2))
    for v in pool:
        w = v_dual(v)
        assert w.d == v.n - v.d
        assert v_dual(w) == v


def test_restriction_is_choice_independent():
    rng = random.Random(2718)
    pool = [rank3_five(), rank2_four()]
    for _ in range(6):
        d = rng.randint(2, 3)
        pool.append(random_valuation(rng, d, rng.randint(d + 1, 6),
                                     inf_prob=0.2))
    checked = 0
    for v in pool:
        u = v.underlying()
        for s in range(1, v.full):
            r = u.rank(s)
            if r == 0 or r == v.d:
                continue
            got = v_restrict(v, s)
            rest = v.full ^ s
            for j in submasks(rest, v.d - r):
                if u.rank(s | j) != v.d or u.rank(j) != v.d - r:
                    continue
                entries = {}
                pos = list(elems(s))
                for t in ksubsets(len(pos), r):
                    glob = mask_of(pos[i] for i in bits(t))
                    entries[t] = v.table[glob | j]
                try:
                    alt = ValuatedMatroid(len(pos), r, entries)
                except AllInfinite:
                    continue
                assert alt == got
                checked += 1
    assert checked > 50


def test_contraction_rank3_five():
    v = rank3_five()
    c = v_contract(v, mask_of([0, 3, 4]))
    assert c == ValuatedMatroid(2, 1, {1: 0, 2: 0})
    d = v_contract(v, mask_of([3, 4]))
    assert d.n == 3 and d.d == 1


def test_contraction_is_dual_restriction():
    rng = random.Random(1618)
    pool = [rank3_five()]
    for _ in range(5):
        d = rng.randint(2, 3)
        pool.append(random_valuation(rng, d, rng.randint(d + 2, 6),
                                     inf_prob=0.25))
    for v in pool:
        u = v.underlying()
        for s in range(1, v.full):
            r = u.rank(s)
            if r == 0 or r == v.d:
                continue
            left = v_contract(v, s)
            right = v_dual(v_restrict(v_dual(v), v.full ^ s))
            assert left == right


def test_stable_sum_and_intersection_duality():
    v = rank2_four()
    h = hyperplane((fr(0), fr(0), fr(0), fr(0)))
    inter = stable_intersection(v, h)
    assert inter.d == 1
    assert v_dual(inter) == stable_sum(v_dual(v), v_dual(h))
    rng = random.Random(4)
    for _ in range(8):
        a = random_valuation(rng, 1, 4)
        b = random_valuation(rng, 2, 4)
        assert v_dual(stable_sum(a, b)) == \
            stable_intersection(v_dual(a), v_dual(b))


def test_stable_guards():
    v3 = random_valuation(random.Random(9), 3, 4)
    with pytest.raises(EmptySupport):
        stable_sum(v3, v3)
    w = ValuatedMatroid(2, 1, {1: 0})
    with pytest.raises(EmptyIntersection):
        stable_intersection(w, w)
    with pytest.raises(ValueError):
        stable_sum(v3, ValuatedMatroid(3, 1, {1: 0}))


def test_stable_intersection_can_reach_rank_zero():
    h = hyperplane((fr(0), fr(0), fr(0), fr(0)))
    w = ValuatedMatroid(4, 1, {1: 0})
    z = stable_intersection(h, w)
    assert z.d == 0 and z.table == {0: fr(0)}


def test_hyperplane_entries():
    h = hyperplane((fr(2), INF, fr(0)))
    assert h.d == 2
    assert h.table == {mask_of([1, 2]): fr(2), mask_of([0, 1]): fr(0),
                       mask_of([0, 2]): INF}
