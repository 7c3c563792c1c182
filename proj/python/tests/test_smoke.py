import pytest

import mmalign

MES = "{(1,1),(1,2),(2,1)}"


def test_counts():
    assert mmalign.count(MES, [4, 5]) == 7
    assert mmalign.count("unit(3)", [1, 2, 3]) == 239
    assert mmalign.count("unit(3)", [10, 10, 10]) == 9850349744182729
    assert mmalign.count_multinomial(MES, [4, 5]) == 7
    assert [mmalign.count_with_parts(MES, [4, 5], k) for k in (3, 4)] == [3, 4]


def test_enumerate_and_sample():
    all_ = mmalign.enumerate(MES, [4, 5])
    assert len(all_) == 7
    assert [[2, 1, 1], [1, 2, 2]] in all_
    drawn = mmalign.sample(MES, [4, 5], seed=3, n=50)
    assert len(drawn) == 50
    assert all(m in all_ for m in drawn)
    with pytest.raises(mmalign.EnumerationCapExceeded):
        mmalign.enumerate("unit(3)", [3, 3, 3], cap=10)


def test_series_matches_count():
    coeffs = mmalign.series_coefficients("unit(2)", [2, 2])
    assert coeffs[(2, 2)] == 13
    assert coeffs[(0, 0)] == 1


def test_formulas_and_tables():
    assert len(mmalign.formulas()) == 23
    assert mmalign.formula("slowinski", [1, 2, 3]) == 239
    assert mmalign.approx("unitcube3_growth") == pytest.approx(56.9476283725)
    assert mmalign.table4(10)[-1] == (10, 68933, 9850349744182729)
    l, exact, approx, err = mmalign.table5(20)[9]
    assert (l, exact) == (10, 68933)
    assert approx == pytest.approx(72418.85, abs=0.01)
    assert err == pytest.approx(0.048, abs=0.001)
    assert mmalign.verify(5)


def test_errors():
    with pytest.raises(mmalign.Error):
        mmalign.count("box(1..2", [1, 1])
    with pytest.raises(ValueError):
        mmalign.count("unit(2)", [1, 2, 3])
    assert mmalign.parse_steps(" { (2,1), (1,1) } ") == "{(1,1),(2,1)}"
