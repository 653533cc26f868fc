from __future__ import annotations

import pytest

from schurlab.catalog import named
from schurlab.groups import SizeGuardError
from schurlab.homology import bar_complex, elementary_divisors_of, h2_integral


@pytest.mark.parametrize("name,expected", [("Z1", []), ("Z5", []), ("Z2^2", [2]), ("Z2^3", [2, 2, 2]),
                                           ("D8", [2]), ("Q8", []), ("Z3^2", [3]), ("S3", [])])
def test_h2_integral_known(name, expected):
    assert h2_integral(named(name)).invariants == expected


@pytest.mark.parametrize("name", ["Z4", "Z2^2", "S3"])
def test_bar_complex_is_a_complex(name):
    assert bar_complex(named(name)).is_complex()


def test_elementary_divisors():
    assert elementary_divisors_of([[2, 0], [0, 3]]) == [6]
    assert elementary_divisors_of([[1, 2], [3, 4]]) == [2]


def test_oracle_guard():
    with pytest.raises(SizeGuardError):
        h2_integral(named("D8xZ2^2"))
