import random
from fractions import Fraction

import pytest

from common import (fr, points_of, rank2_four, rank3_five, rank3_five_rows,
                    random_rows, random_valuation, three_pair_dual_rows,
                    three_pair_valuation)
from troplin import (INF, CountMismatch, Matroid, NotCyclicFlat,
                     NotTransversalFacets, PointOutsideL, TroplinError,
                     ValuatedMatroid, WrongArity, contract_presentation,
                     distinguished, maximal_cells, membership,
                     presentation_fan_member, presentation_space_member,
                     r0_member, rinf_member, sample_presentation, stiefel,
                     uniform_matroid, v_contract, v_dual, verify_presentation)
from troplin.oracle import rinf_facet_oracle
from troplin.util import ksubsets, list1, mask_of


def cell_without_34():
    return Matroid(4, [b for b in ksubsets(4, 2) if b != mask_of([2, 3])],
                   check=False)


def cell_without_12():
    return Matroid(4, [b for b in ksubsets(4, 2) if b != mask_of([0, 1])],
                   check=False)


def test_r0_membership():
    v = rank3_five()
    x = (fr(1), fr(1), fr(1), fr(0), fr(0))
    assert r0_member(v, mask_of([3, 4]), x, (fr(0),) * 5)
    assert not r0_member(v, mask_of([3, 4]), x, x)


def test_rinf_regions_rank2_four():
    v = rank2_four()
    f12, f34 = mask_of([0, 1]), mask_of([2, 3])
    assert rinf_member(v, cell_without_12(), f12, (fr(0), fr(0), fr(0), fr(0)))
    assert not rinf_member(v, cell_without_12(), f12, (fr(0), fr(0), fr(1), fr(1)))
    assert rinf_member(v, cell_without_12(), f12, (fr(5), fr(0), fr(0), fr(0)))
    assert rinf_member(v, cell_without_34(), f34, (fr(0), fr(0), fr(1), fr(1)))
    assert not rinf_member(v, cell_without_34(), f34, (fr(0), fr(0), fr(0), fr(0)))
    # all-infinite on the flat always counts
    assert rinf_member(v, cell_without_12(), f12, (INF, INF, fr(0), fr(0)))
    with pytest.raises(NotCyclicFlat):
        rinf_member(v, cell_without_12(), mask_of([0]), (fr(0),) * 4)


def test_rinf_agrees_with_interval_oracle():
    rng = random.Random(1234)
    compared = 0
    for v in (rank2_four(), rank3_five()):
        for cell in maximal_cells(v):
            m = cell.matroid
            for f in m.cyclic_flats():
                if f == 0 or f == m.full:
                    continue
                for _ in range(40):
                    z = tuple(INF if rng.random() < 0.15
                              else Fraction(rng.randint(-4, 8),
                                            rng.choice((1, 2)))
                              for _ in range(v.n))
                    if all(c == INF for c in z):
                        continue
                    want = rinf_facet_oracle(v, m, f, z)
                    if want is None:
                        break
                    assert rinf_member(v, m, f, z) == want
                    compared += 1
    assert compared >= 80


def test_verify_presentation_golden():
    v = rank2_four()
    rep = verify_presentation(
        v, [(fr(0), fr(0), fr(0), fr(0)), (fr(0), fr(0), fr(1), fr(1))])
    assert rep == {"ok": True, "violations": []}
    z = rank3_five()
    assert verify_presentation(z, points_of(rank3_five_rows()))["ok"]
    dual = v_dual(three_pair_valuation())
    assert verify_presentation(dual, points_of(three_pair_dual_rows()))["ok"]


def test_verify_presentation_counts_failures():
    v = rank2_four()
    rep = verify_presentation(v, [(fr(0),) * 4, (fr(0),) * 4])
    assert not rep["ok"]
    got = {(tuple(map(tuple, w["cell"])), tuple(w["flat"]), w["kind"],
            w["count"], w["bound"]) for w in rep["violations"]}
    cell_a = tuple(sorted(map(tuple, (list1(b) for b in cell_without_34().bases))))
    cell_b = tuple(sorted(map(tuple, (list1(b) for b in cell_without_12().bases))))
    norm = {(tuple(sorted(c)), f, k, cnt, b) for c, f, k, cnt, b in got}
    assert norm == {
        (cell_a, (3, 4), "sigmainf", 0, 1),
        (cell_b, (1, 2), "sigma0", 2, 1),
        (cell_b, (1, 2), "sigmainf", 2, 1),
    }


def test_verify_presentation_guards():
    v = rank2_four()
    with pytest.raises(WrongArity):
        verify_presentation(v, [(fr(0),) * 4])
    with pytest.raises(PointOutsideL) as err:
        verify_presentation(v, [(fr(0),) * 4, (fr(0), fr(1), fr(1), fr(1))])
    assert err.value.witness == {"index": 2}
    lollipop = ValuatedMatroid(3, 2, {mask_of([0, 1]): 0, mask_of([0, 2]): 0})
    with pytest.raises(TroplinError):
        verify_presentation(lollipop, [(fr(0),) * 3, (fr(0),) * 3])


def test_distinguished_rank2_four():
    data = distinguished(rank2_four())
    assert sorted(data.apices()) == [
        (fr(0), fr(0), fr(0), fr(0)), (fr(0), fr(0), fr(1), fr(1))]
    assert [e.flat for e in data] == [0, 0]
    assert all(e.multiplicity == 1 for e in data)


def test_distinguished_rank3_five():
    data = distinguished(rank3_five())
    assert len(data) == 3
    assert sorted(e.flat for e in data) == [0, 0, mask_of([0, 3, 4])]
    assert sorted(data.apices()) == sorted([
        (fr(0), fr(0), fr(0), fr(0), fr(0)),
        (fr(1), fr(1), fr(1), fr(0), fr(0)),
        (INF, fr(0), fr(0), INF, INF)])
    entry = [e for e in data if e.flat][0]
    assert entry.coords == (1, 2)
    assert entry.vertex == (fr(0), fr(0))


def test_distinguished_rejects_non_transversal_facet():
    with pytest.raises(NotTransversalFacets) as err:
        distinguished(three_pair_valuation())
    assert err.value.witness["certificate"]["family"] == \
        [[1, 2], [3, 4], [5, 6]]


def test_distinguished_rejects_loops_and_coloops():
    coloopy = ValuatedMatroid(3, 2,
                              {mask_of([0, 1]): 0, mask_of([0, 2]): 0})
    with pytest.raises(TroplinError) as err:
        distinguished(coloopy)
    assert err.value.witness == [1]
    loopy = ValuatedMatroid(3, 1, {mask_of([0]): 0, mask_of([1]): 0})
    with pytest.raises(TroplinError) as err:
        distinguished(loopy)
    assert err.value.witness == [3]


def test_presentation_fan_member_uniform():
    m = uniform_matroid(2, 4)
    assert presentation_fan_member(
        m, [(fr(3), fr(0), fr(0), fr(0)), (fr(0), fr(2), fr(0), fr(0))])
    assert not presentation_fan_member(
        m, [(fr(3), fr(0), fr(0), fr(0)), (fr(5), fr(0), fr(0), fr(0))])
    assert presentation_fan_member(
        m, [(INF, fr(0), fr(0), fr(0)), (fr(0), fr(2), fr(0), fr(0))])
    with pytest.raises(WrongArity):
        presentation_fan_member(m, [(fr(0),) * 4])


def test_presentation_space_member_golden():
    v = rank2_four()
    apices = [(fr(0), fr(0), fr(0), fr(0)), (fr(0), fr(0), fr(1), fr(1))]
    assert presentation_space_member(v, apices)
    assert presentation_space_member(v, apices[::-1])
    z = rank3_five()
    assert presentation_space_member(z, points_of(rank3_five_rows()))
    dual = v_dual(three_pair_valuation())
    assert presentation_space_member(dual, points_of(three_pair_dual_rows()))


def test_presentation_space_member_rejects():
    trivial = ValuatedMatroid(4, 2, {b: 0 for b in ksubsets(4, 2)})
    assert not presentation_space_member(
        trivial, [(fr(3), fr(0), fr(0), fr(0)), (fr(5), fr(0), fr(0), fr(0))])
    assert presentation_space_member(
        trivial, [(fr(3), fr(0), fr(0), fr(0)), (fr(0), fr(2), fr(0), fr(0))])
    v = rank2_four()
    assert not presentation_space_member(
        v, [(fr(0), fr(0), fr(1), fr(1)), (fr(0), fr(0), fr(1), fr(1))])
    with pytest.raises(WrongArity):
        presentation_space_member(v, [(fr(0),) * 4])


def test_sample_presentation_seeds():
    for v in (rank2_four(), rank3_five(), v_dual(three_pair_valuation())):
        pts = sample_presentation(v, seed=0)
        assert sorted(pts) == sorted(distinguished(v).apices())
        for seed in (1, 2, 3):
            pts = sample_presentation(v, seed=seed)
            assert stiefel(pts) == v
            assert presentation_space_member(v, pts)
            for p in pts:
                assert membership(v, p)


def test_contract_presentation_golden():
    v = rank3_five()
    rows = points_of(rank3_five_rows())
    proj = contract_presentation(v, rows, mask_of([0, 3, 4]))
    assert proj == [(fr(0), fr(0))]
    assert stiefel(proj) == v_contract(v, mask_of([0, 3, 4]))
    # the empty flat keeps every point
    assert contract_presentation(v, rows, 0) == rows


def test_contract_presentation_guards():
    v = rank3_five()
    rows = points_of(rank3_five_rows())
    with pytest.raises(CountMismatch) as err:
        contract_presentation(v, [rows[0]] * 3, mask_of([0, 3, 4]))
    assert err.value.witness == {"expected": 1, "got": 0}
    with pytest.raises(NotCyclicFlat):
        contract_presentation(v, rows, mask_of([1, 2]))
    with pytest.raises(WrongArity):
        contract_presentation(v, rows[:2], mask_of([0, 3, 4]))


def test_contraction_round_trip_random():
    rng = random.Random(5321)
    done = 0
    nontrivial = 0
    while done < 20:
        d = rng.randint(2, 3)
        n = rng.randint(d + 2, 6)
        rows = random_rows(rng, d, n, inf_prob=0.3)
        v = stiefel(rows)
        u = v.underlying()
        for f in u.cyclic_flats():
            if f == u.full:
                continue
            proj = contract_presentation(v, points_of(rows), f)
            assert stiefel(proj) == v_contract(v, f)
            done += 1
            nontrivial += bool(f)
    assert nontrivial >= 4
