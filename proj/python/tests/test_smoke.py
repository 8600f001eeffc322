# Copyright 2026 The hecke-models Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import hecke_models as hm


def test_anchor_polynomials():
    assert hm.recover_an(0).coeffs == [4, 0, 3]
    assert hm.recover_an(1).coeffs == [-48, 0, -8, 0, 69]
    a2 = hm.recover_an(2)
    assert a2.degree == 6
    assert a2.pi_set == [3]
    assert a2(0) == Fraction(16384, 27)


def test_classical_expansion():
    ahat = hm.natural_expansion(3, 4)
    assert ahat[0] == 1
    assert ahat[1] == Fraction(31, 72)
    assert 1728**2 * ahat[2] == 196884
    assert hm.calibrate(3) == (32, Fraction(-31, 3))
    assert hm.calibrated_expansion(3, 3)[1] == Fraction(31, 9)


def test_models_and_factorization():
    a0 = hm.recover_an(0)
    assert hm.model(a0, 7) == [4, 0, 3]
    assert hm.splitting_degree(a0, 5) == 2
    unit, factors = hm.factor_mod_p([4, 0, 3], 7)
    assert unit == 3
    assert sorted(f[0][0] for f in factors) == [1, 6]
    assert all(m == 1 for _, m in factors)
    prof = hm.root_profile(hm.recover_an(1), 5)
    assert prof["s_A"] == 4
    assert prof["matched_row"] == "T2.1.4"


def test_orbits():
    assert hm.base_p_expansion(29412, 7, 6) == [5, 1, 5, 1, 5, 1]
    assert hm.orbit_size_of_exponent(41280, 7, 6) == 3


def test_table_round_trip_and_verify():
    table = hm.generate_table(4)
    text = hm.write_atable(table)
    back = hm.parse_atable(text)
    assert [a.coeffs for a in back] == [a.coeffs for a in table]
    out = hm.verify(table, nmax=3, primes=[5])
    assert not out["has_fail"]
    assert out["report"].startswith("p,n,mod_np,s_A,delta,unit,profile,matched_row,verdict")
    assert out["tally"][("C3.4", "pass")] >= 1


def test_errors():
    with pytest.raises(hm.ParseError):
        hm.parse_atable("ATABLE 2\n")
    with pytest.raises(hm.DegenerateModelError):
        hm.splitting_degree(hm.InterpolatedA(0, [2, 0, 2]), 2)
    assert issubclass(hm.ParseError, hm.HeckeError)
