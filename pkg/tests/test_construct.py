"""Construction of RS/GRS, twisted, star/plus, and Roth-Lempel codes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedrs.construct import (
    ConstructionError,
    LinearCode,
    RothLempelSpec,
    TwistedCodeSpec,
    evaluate,
    grs_code,
    make_code,
    plus_twisted,
    roth_lempel_code,
    roth_lempel_is_mds_condition,
    rs_code,
    spec_from_json,
    star_twisted,
    twisted_code,
)
from twistedrs.galois import INF, make_field
from twistedrs.linalg import det, rank
from twistedrs.mdscheck import is_mds_condition_star, is_mds_minors


def test_evaluate_constant_is_all_ones():
    f = make_field(7)
    assert evaluate(f, [1], (0, 1, 2, 3), 3) == [1, 1, 1, 1]


def test_evaluate_top_monomial_at_infinity():
    f = make_field(7)
    word = evaluate(f, [0, 0, 1], (1, 2, INF), 2)
    assert word[2] == 1


def test_evaluate_linear_with_infinity():
    f = make_field(7)
    a = 3
    # x - a at (a, b, inf) with ell = 1 gives (0, b - a, 1)
    assert evaluate(f, [f.neg(a), 1], (a, 5, INF), 1) == [0, f.sub(5, a), 1]


def test_evaluate_rejects_duplicates_and_high_degree():
    f = make_field(7)
    with pytest.raises(ConstructionError):
        evaluate(f, [1], (1, 1), 2)
    with pytest.raises(ConstructionError):
        evaluate(f, [0, 0, 0, 1], (0, 1), 2)


def test_rs_code_vandermonde():
    f = make_field(5)
    code = rs_code(f, (0, 1, 2, 3, 4), 2)
    assert code.rows() == [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]]


def test_grs_all_ones_is_rs():
    f = make_field(7)
    alpha = (0, 1, 3, 5)
    assert grs_code(f, alpha, 2, [1] * 4).generator == rs_code(f, alpha, 2).generator


def test_grs_rejects_zero_multiplier():
    f = make_field(7)
    with pytest.raises(ConstructionError):
        grs_code(f, (0, 1, 2), 2, [1, 0, 1])


def test_twisted_code_hand_example():
    f = make_field(7)
    spec = TwistedCodeSpec(f, (1, 2, 4, 0), 2, 1, 0, 3)
    code = twisted_code(spec)
    # rows: evaluation of 1 + 3x^2 and of x
    assert code.rows() == [
        evaluate(f, [1, 0, 3], spec.alpha, 2),
        evaluate(f, [0, 1], spec.alpha, 2),
    ]
    assert code.rows()[0] == [4, 6, 0, 1]


def test_twisted_inf_column_with_top_hook():
    f = make_field(7)
    spec = TwistedCodeSpec(f, (0, 1, 2, INF), 3, 1, 2, 4)
    code = twisted_code(spec)
    assert [row[3] for row in code.rows()] == [0, 0, 4]


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_twisted_code_always_has_rank_k(data):
    q, pm = data.draw(st.sampled_from([(5, (5, 1)), (7, (7, 1)), (8, (2, 3)), (9, (3, 2))]))
    f = make_field(*pm)
    n = data.draw(st.integers(3, min(q + 1, 7)))
    universe = list(range(q)) + [INF]
    alpha = tuple(data.draw(st.permutations(universe))[:n])
    k = data.draw(st.integers(1, n - 1))
    t = data.draw(st.integers(1, n - k))
    h = data.draw(st.integers(0, k - 1))
    eta = data.draw(st.integers(1, q - 1))
    code = twisted_code(TwistedCodeSpec(f, alpha, k, t, h, eta))
    assert rank(f, code.rows()) == k


def test_spec_validation():
    f = make_field(7)
    with pytest.raises(ConstructionError):
        TwistedCodeSpec(f, (0, 1, 2, 3), 3, 2, 0, 1)  # t > n - k
    with pytest.raises(ConstructionError):
        TwistedCodeSpec(f, (0, 1, 2, 3), 2, 1, 2, 1)  # h >= k
    with pytest.raises(ConstructionError):
        TwistedCodeSpec(f, (0, 1, 2, 3), 2, 1, 0, 0)  # eta = 0
    with pytest.raises(ConstructionError):
        TwistedCodeSpec(f, (0, 1, 1, 3), 2, 1, 0, 1)  # duplicate point


def test_spec_json_round_trip():
    f = make_field(3, 2)
    spec = TwistedCodeSpec(f, (0, 1, 4, INF), 2, 1, 1, 5)
    assert spec_from_json(spec.to_json()) == spec


def test_twist_removal_recovers_rs_rows():
    f = make_field(7)
    alpha = (1, 2, 4, 0)
    spec = TwistedCodeSpec(f, alpha, 2, 1, 0, 3)
    twisted = twisted_code(spec).rows()
    plain = rs_code(f, alpha, 2).rows()
    assert twisted[1] == plain[1]
    ell_eval = evaluate(f, [0, 0, spec.eta], alpha, 2)
    assert twisted[0] == [f.add(x, y) for x, y in zip(plain[0], ell_eval)]


# ---------------------------------------------------------------------------
# star / plus subclasses
# ---------------------------------------------------------------------------

def _subgroup(field, order):
    from twistedrs.galois import multiplicative_subgroups

    return next(s for s in multiplicative_subgroups(field) if s.order == order)


def test_star_gf19_full_length():
    f = make_field(19)
    g9 = _subgroup(f, 9)
    alpha = tuple(sorted(set(g9.elements) | {0}))
    assert len(alpha) == 10 == (f.q - 1) // 2 + 1
    spec = star_twisted(f, g9, alpha, 3, eta=_valid_star_eta(f, g9, 3))
    assert is_mds_minors(twisted_code(spec)).is_mds


def _valid_star_eta(field, sub, k):
    sign = field.pow(field.minus_one(), k)
    return next(
        e for e in field.nonzero()
        if field.mul(sign, field.inv(e)) not in set(sub.elements)
    )


def test_star_gf7_valid_eta_set():
    f = make_field(7)
    g3 = _subgroup(f, 3)
    alpha = (0, 1, 2, 4)
    # brute force over all eta via the product condition on all 2-subsets
    by_condition = {
        e for e in f.nonzero()
        if is_mds_condition_star(f, alpha, 2, e).is_mds
    }
    accepted = set()
    for e in f.nonzero():
        try:
            star_twisted(f, g3, alpha, 2, e)
            accepted.add(e)
        except ConstructionError:
            pass
    assert accepted == by_condition == {3, 5, 6}
    assert {f.inv(e) for e in accepted} == {3, 5, 6}


def test_star_rejects_bad_eta_and_points():
    f = make_field(7)
    g3 = _subgroup(f, 3)
    with pytest.raises(ConstructionError):
        star_twisted(f, g3, (0, 1, 2, 4), 2, 1)  # (-1)^k/eta inside G
    with pytest.raises(ConstructionError):
        star_twisted(f, g3, (0, 1, 2, 3), 2, 3)  # 3 outside G u {0}
    g6 = _subgroup(f, 6)
    with pytest.raises(ConstructionError):
        star_twisted(f, g6, (1, 2, 3), 2, 3)  # G not proper


def test_plus_gf16_full_length():
    from twistedrs.galois import additive_subgroups

    f = make_field(2, 4)
    v8 = additive_subgroups(f, 8)[0]
    alpha = tuple(sorted(v8.elements)) + (INF,)
    assert len(alpha) == 9 == f.q // 2 + 1
    eta = next(e for e in f.nonzero() if f.inv(e) not in set(v8.elements))
    spec = plus_twisted(f, v8, alpha, 5, eta)
    assert spec.t == 1 and spec.h == 4
    assert is_mds_minors(twisted_code(spec)).is_mds


def test_plus_rejects_eta_with_inverse_inside():
    from twistedrs.galois import additive_subgroups

    f = make_field(2, 4)
    v8 = additive_subgroups(f, 8)[0]
    alpha = tuple(sorted(v8.elements)) + (INF,)
    bad = next(e for e in f.nonzero() if f.inv(e) in set(v8.elements))
    with pytest.raises(ConstructionError):
        plus_twisted(f, v8, alpha, 5, bad)


# ---------------------------------------------------------------------------
# Roth-Lempel construction
# ---------------------------------------------------------------------------

def test_rl_shape_and_delta_column():
    f = make_field(13)
    spec = RothLempelSpec(f, (0, 1, 2, 5, INF), 3, 4)
    code = roth_lempel_code(spec)
    assert (code.n, code.k) == (6, 3)
    cols = [[row[j] for row in code.rows()] for j in range(code.n)]
    assert cols[4] == [0, 0, 1]      # infinity column
    assert cols[5] == [0, 4, 1]      # delta column


def test_rl_minor_with_both_appended_columns():
    # k-subset holding both special columns: +-delta * Vandermonde
    f = make_field(13)
    delta = 7
    spec = RothLempelSpec(f, (2, 3, 11, INF), 3, delta)
    code = roth_lempel_code(spec)
    rows = code.rows()
    sub = [[row[c] for c in (0, 3, 4)] for row in rows]  # alpha=2, inf, w
    expected = delta  # cofactor expansion: delta times the 1x1 Vandermonde
    assert det(f, sub) in (expected, f.neg(expected))


def test_rl_mds_condition_matches_minors_exhaustively():
    from itertools import combinations

    f = make_field(7)
    universe = list(range(7)) + [INF]
    for pts in combinations(universe, 4):
        for delta in f.elements():
            if delta == 0 and INF in pts:
                continue
            spec = RothLempelSpec(f, pts, 3, delta)
            code = roth_lempel_code(spec)
            assert roth_lempel_is_mds_condition(spec) == is_mds_minors(code).is_mds


def test_rl_rejects_degenerate_delta():
    f = make_field(13)
    with pytest.raises(ConstructionError):
        RothLempelSpec(f, (0, 1, 2, INF), 3, 0)
    with pytest.raises(ConstructionError):
        RothLempelSpec(f, (0, 1), 3, 1)  # too short


def test_linear_code_validation():
    f = make_field(5)
    with pytest.raises(ConstructionError):
        make_code(f, [[1, 2, 3], [2, 4, 1]])  # rank 1
    code = make_code(f, [[1, 0, 1], [0, 1, 2]])
    assert isinstance(code, LinearCode)
