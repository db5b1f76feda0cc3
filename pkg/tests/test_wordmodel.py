from hypothesis import given, strategies as st
import pytest

from qck.graphcore import POS_INF, is_crystal, is_seminormal, validate
from qck.wordmodel import (
    DEFAULT_SIZE_CAP,
    SIZE_CAP_ENV,
    SizeCapExceeded,
    default_size_cap,
    id_to_word,
    quasi_tensor,
    quasi_tensor_power,
    standard_crystal,
    tensor,
    tensor_power,
    word_content,
    word_to_id,
)

from corpus import qpow, std, tpow


@st.composite
def words(draw):
    n = draw(st.integers(min_value=2, max_value=12))
    length = draw(st.integers(min_value=1, max_value=6))
    word = tuple(draw(st.integers(min_value=1, max_value=n)) for _ in range(length))
    return word, n


@given(words())
def test_word_id_roundtrip(word_n):
    word, n = word_n
    assert id_to_word(word_to_id(word, n), n) == word


def test_word_id_digit_and_dash_forms():
    assert word_to_id((1, 2, 3), 3) == "123"
    assert word_to_id((10, 2), 12) == "10-2"
    assert id_to_word("10-2", 12) == (10, 2)


def test_word_content():
    assert word_content((1, 2, 2, 3), 3) == (1, 2, 1)
    assert word_content((2,), 4) == (0, 1, 0, 0)


@given(words())
def test_word_content_sums_to_length(word_n):
    word, n = word_n
    assert sum(word_content(word, n)) == len(word)


def test_standard_crystal_tables():
    for n in range(2, 7):
        g = standard_crystal(n)
        assert len(g) == n
        assert g.vertex_ids() == [word_to_id((j,), n) for j in range(1, n + 1)]
        for j in range(1, n + 1):
            vid = word_to_id((j,), n)
            expected_wt = tuple(1 if c == j else 0 for c in range(1, n + 1))
            assert g.wt(vid) == expected_wt
            for i in g.index_set:
                assert g.eps(vid, i) == (1 if i + 1 == j else 0)
                assert g.phi(vid, i) == (1 if i == j else 0)
                target = g.f(vid, i)
                if i == j:
                    assert target == word_to_id((j + 1,), n)
                else:
                    assert target is None
        assert validate(g).passed
        assert is_seminormal(g).passed
        assert is_crystal(g)


def test_standard_crystal_degenerate_ranks():
    with pytest.raises(ValueError):
        standard_crystal(0)
    trivial = standard_crystal(1)
    assert len(trivial) == 1
    assert list(trivial.index_set) == []


def test_tensor_square_rank_two_table():
    t = tensor(standard_crystal(2), standard_crystal(2))
    assert t.vertex_ids() == ["11", "12", "21", "22"]
    rows = {
        x: (t.wt(x), t.eps(x, 1), t.phi(x, 1), t.f(x, 1), t.e(x, 1))
        for x in t.vertex_ids()
    }
    assert rows == {
        "11": ((2, 0), 0, 2, "12", None),
        "12": ((1, 1), 1, 1, "22", "11"),
        "21": ((1, 1), 0, 0, None, None),
        "22": ((0, 2), 2, 0, None, "12"),
    }


def test_quasi_tensor_square_blocks_the_inversion():
    q = quasi_tensor(standard_crystal(2), standard_crystal(2))
    assert q.eps("21", 1) == POS_INF
    assert q.phi("21", 1) == POS_INF
    assert q.is_loop("21", 1)
    assert q.e("21", 1) is None and q.f("21", 1) is None
    # the other three vertices keep their classical data
    t = tensor(standard_crystal(2), standard_crystal(2))
    for x in ("11", "12", "22"):
        assert q.wt(x) == t.wt(x)
        assert q.eps(x, 1) == t.eps(x, 1)
        assert q.phi(x, 1) == t.phi(x, 1)
        assert q.f(x, 1) == t.f(x, 1)


def test_pair_id_keeps_newest_letter_first():
    # the left factor is the newer letter, so it leads the id string
    q = quasi_tensor(standard_crystal(3), standard_crystal(3))
    assert set(q.vertex_ids()) == {f"{a}{b}" for a in "123" for b in "123"}
    # 1 then 2 then 3 builds the fully frozen vertex "321"
    q3 = qpow(3, 3)
    assert all(q3.is_loop("321", i) for i in q3.index_set)
    assert all(q3.eps("321", i) == POS_INF for i in q3.index_set)


def test_power_sizes_and_ids():
    for n, k in [(2, 3), (3, 2), (3, 3), (4, 2)]:
        g = qpow(n, k)
        assert len(g) == n**k
        assert all(len(id_to_word(x, n)) == k for x in g.vertex_ids())


def test_power_matches_manual_iteration():
    manual = quasi_tensor(
        quasi_tensor(standard_crystal(3), standard_crystal(3)), standard_crystal(3)
    )
    assert qpow(3, 3) == manual
    manual_t = tensor(tensor(standard_crystal(3), standard_crystal(3)), standard_crystal(3))
    assert tpow(3, 3) == manual_t


def test_power_weight_is_word_content():
    g = qpow(3, 3)
    for x in g.vertex_ids():
        assert g.wt(x) == word_content(id_to_word(x, 3), 3)


def test_tensor_requires_crystals():
    with pytest.raises(ValueError):
        tensor(qpow(2, 2), standard_crystal(2))  # left factor holds a loop


def test_quasi_powers_are_not_crystals_but_tensor_powers_are():
    assert not is_crystal(qpow(2, 2))
    assert is_crystal(tpow(3, 3))


def test_power_argument_validation():
    with pytest.raises(ValueError):
        tensor_power(3, 0)
    with pytest.raises(ValueError):
        quasi_tensor_power(1, 2)


def test_size_cap_blocks_large_builds():
    with pytest.raises(SizeCapExceeded):
        quasi_tensor_power(10, 7)
    with pytest.raises(SizeCapExceeded):
        tensor_power(2, 4, size_cap=8)
    assert len(tensor_power(2, 3, size_cap=8)) == 8


def test_size_cap_env_override(monkeypatch):
    monkeypatch.setenv(SIZE_CAP_ENV, "10")
    assert default_size_cap() == 10
    with pytest.raises(SizeCapExceeded):
        quasi_tensor_power(2, 4)
    monkeypatch.delenv(SIZE_CAP_ENV)
    assert default_size_cap() == DEFAULT_SIZE_CAP


def test_all_corpus_powers_validate():
    for n, k in [(2, 4), (3, 3), (4, 2)]:
        assert validate(qpow(n, k)).passed
        assert is_seminormal(qpow(n, k)).passed
        assert validate(tpow(n, k)).passed
        assert is_seminormal(tpow(n, k)).passed
