import pytest

import indeq


def test_polynomials():
    assert indeq.independence_polynomial("P:10") == [1, 10, 36, 56, 35, 6]
    assert indeq.independence_polynomial("C:6") == [1, 6, 9, 2]
    assert indeq.independence_polynomial("C~") == [1, 4]


def test_big_coefficients_are_exact():
    coeffs = indeq.independence_polynomial("P:200")
    assert coeffs[1] == 200
    assert max(coeffs) > 2**64


def test_factorizations():
    assert indeq.factor_path(10) == "f2 f3 f6 ft3"
    assert indeq.factor_cycle(6) == "f2 f6"
    assert indeq.basis("f6") == [1, 4, 1]
    with pytest.raises(ValueError):
        indeq.basis("ft4")


def test_classes():
    assert len(indeq.path_class(10)) == 10
    assert sorted(indeq.cycle_class(6)) == sorted(["C:6", "D:6", "P:2+K4e"])
    assert indeq.bruteforce_class_size("C:6") == 3


def test_screen():
    assert indeq.admissible("Y:2,1,1")
    assert not indeq.admissible("Y:3,1,1")


def test_parse_error():
    with pytest.raises(indeq.SpecParseError):
        indeq.graph6("C:2")
