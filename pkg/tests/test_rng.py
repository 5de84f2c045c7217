import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randlp import derive_stream

# Golden sequence pinned from the first run of this implementation; guards
# against accidental changes to the stream derivation or the sign mapping.
GOLDEN_SIGNS_42_0 = [1, 1, 1, 1, -1, -1, -1, -1, -1, -1]
GOLDEN_REALS_42_0 = [916.7441575549086, 910.9866676343233, 876.5925046098458]


def test_golden_first_signs():
    s = derive_stream(42, 0)
    assert list(s.next_signs(10)) == GOLDEN_SIGNS_42_0


def test_golden_first_reals():
    s = derive_stream(42, 0)
    got = [s.next_real(0.0, 1000.0) for _ in range(3)]
    assert got == GOLDEN_REALS_42_0


def test_same_key_same_sequence():
    a = derive_stream(42, 0)
    b = derive_stream(42, 0)
    assert np.array_equal(a.raw_words(1000), b.raw_words(1000))


def test_different_ids_diverge():
    a = derive_stream(42, 1).raw_words(1000)
    b = derive_stream(42, 2).raw_words(1000)
    assert np.any(a != b)


def test_different_seeds_diverge():
    a = derive_stream(7, 0).raw_words(1000)
    b = derive_stream(42, 0).raw_words(1000)
    assert np.any(a != b)


def test_batch_draws_match_scalar_draws():
    batch = derive_stream(5, 3).next_signs(64)
    single = derive_stream(5, 3)
    assert list(batch) == [single.next_sign() for _ in range(64)]

    batch = derive_stream(5, 3).next_reals(-2.0, 9.0, 64)
    single = derive_stream(5, 3)
    assert list(batch) == [single.next_real(-2.0, 9.0) for _ in range(64)]


def test_one_word_per_draw():
    # signs and reals both consume exactly one raw word each
    words = derive_stream(11, 0).raw_words(6)
    s = derive_stream(11, 0)
    s.next_signs(2)
    s.next_real(0.0, 1.0)
    s.next_reals(0.0, 1.0, 2)
    # the 6th word is next
    assert s.raw_words(1)[0] == words[5]


def test_sign_values():
    draws = derive_stream(0, 0).next_signs(1000)
    assert set(np.unique(draws)) <= {-1, 1}


def test_sign_balance():
    draws = derive_stream(123, 0).next_signs(100_000)
    frac = float((draws == 1).mean())
    assert 0.49 <= frac <= 0.51


def test_real_mean():
    draws = derive_stream(123, 0).next_reals(0.0, 1.0, 100_000)
    assert 0.49 <= float(draws.mean()) <= 0.51


def test_range_safety_bulk():
    # one million draws across assorted ranges, boundaries included
    for seed, (l, r) in enumerate([(0.0, 1000.0), (0.0, 1e-4), (-5.0, 5.0), (-1e9, 1e9)]):
        draws = derive_stream(seed, 0).next_reals(l, r, 250_000)
        assert draws.min() >= l
        assert draws.max() <= r


@given(
    st.floats(-1e6, 1e6),
    st.floats(1e-9, 1e6),
    st.integers(0, 2**32),
)
@settings(max_examples=50, deadline=None)
def test_range_safety_property(l, width, seed):
    r = l + width
    if not l < r:
        return
    draws = derive_stream(seed, 0).next_reals(l, r, 256)
    assert float(draws.min()) >= l
    assert float(draws.max()) <= r


def test_domain_errors():
    s = derive_stream(0, 0)
    with pytest.raises(ValueError):
        s.next_real(1.0, 1.0)
    with pytest.raises(ValueError):
        s.next_reals(2.0, 1.0, 4)
    with pytest.raises(ValueError):
        derive_stream(-1, 0)
    with pytest.raises(ValueError):
        derive_stream(2**64, 0)
    with pytest.raises(ValueError):
        derive_stream(0, -1)


def test_stream_identity_attributes():
    s = derive_stream(9, 4)
    assert s.seed == 9
    assert s.stream_id == 4
