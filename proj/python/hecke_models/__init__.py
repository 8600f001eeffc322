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

"""Hecke-group interpolating polynomials A_n and their finite-field models."""

from ._hecke import (
    ArgumentError,
    BudgetExceeded,
    CacheCorruptionError,
    CoercionDomainError,
    DegenerateModelError,
    HeckeError,
    InterpolatedA,
    ParseError,
    base_p_expansion,
    calibrate,
    factor_mod_p,
    generate_table,
    model,
    natural_expansion,
    orbit_size_of_exponent,
    calibrated_expansion,
    parse_atable,
    recover_an,
    root_profile,
    splitting_degree,
    verify,
    write_atable,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BudgetExceeded",
    "CacheCorruptionError",
    "CoercionDomainError",
    "DegenerateModelError",
    "HeckeError",
    "InterpolatedA",
    "ParseError",
    "base_p_expansion",
    "calibrate",
    "factor_mod_p",
    "generate_table",
    "model",
    "natural_expansion",
    "orbit_size_of_exponent",
    "calibrated_expansion",
    "parse_atable",
    "recover_an",
    "root_profile",
    "splitting_degree",
    "verify",
    "write_atable",
]
