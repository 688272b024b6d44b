"""Closed-form genera of Suzuki-family quotient curves.

Two subgroup families are handled: subgroups of the Singer-cycle square
Sigma_- x C_m (by standard exponents) and the cyclic/dihedral subgroups
C_d x C_n, D_d x C_n of B0 x C_m with d | q-1 and n | m.
"""

from __future__ import annotations

from .catalog import (
    B0Cyclic,
    B0Dihedral,
    GenusRecord,
    NonIntegralGenusError,
    SigmaCm,
    StandardExponents,
    make_record,
    subgroup_order_sigma,
)
from .curves import CurveParams, Family
from .singer import delta_sigma_cm


def _require_suzuki(params: CurveParams) -> None:
    if params.family is not Family.SUZUKI:
        raise ValueError(f"need Suzuki parameters, got {params.family.value}")


def genus_sigma_cm_suzuki(params: CurveParams, se: StandardExponents) -> GenusRecord:
    """Quotient by the subgroup of Sigma_- x C_m with standard exponents se."""
    _require_suzuki(params)
    delta = delta_sigma_cm(params, se)
    order = subgroup_order_sigma(params.m, se)
    return make_record(params, SigmaCm(se), order, delta)


def _validate_b0(params: CurveParams, d: int, n: int) -> None:
    if d < 1 or (params.q - 1) % d != 0:
        raise ValueError(f"d={d} does not divide q-1={params.q - 1}")
    if n < 1 or params.m % n != 0:
        raise ValueError(f"n={n} does not divide m={params.m}")


def genus_b0_cyclic(params: CurveParams, d: int, n: int) -> GenusRecord:
    """Quotient by C_d x C_n, order d*n."""
    _require_suzuki(params)
    _validate_b0(params, d, n)
    q = params.q
    order = d * n
    numerator = (q**2 + 1) * (q - n - 1) - 2 * (d - 1) * n
    if numerator % (2 * order) != 0:
        raise NonIntegralGenusError(f"B0 cyclic (d={d}, n={n}): non-integral genus")
    genus = numerator // (2 * order) + 1
    delta = params.ambient_degree - order * (2 * genus - 2)
    record = make_record(params, B0Cyclic(d, n), order, delta)
    assert record.genus == genus
    return record


def genus_b0_dihedral(params: CurveParams, d: int, n: int) -> GenusRecord:
    """Quotient by D_d x C_n, order 2*d*n (D_1 is the order-2 group)."""
    _require_suzuki(params)
    _validate_b0(params, d, n)
    q, q0, m = params.q, params.q0, params.m
    order = 2 * d * n
    numerator = (q**2 + 1) * (q - n - 1) - d * m * (2 * q0 + 1) - 3 * d * n + 2 * n
    if numerator % (2 * order) != 0:
        raise NonIntegralGenusError(f"B0 dihedral (d={d}, n={n}): non-integral genus")
    genus = numerator // (2 * order) + 1
    delta = params.ambient_degree - order * (2 * genus - 2)
    record = make_record(params, B0Dihedral(d, n), order, delta)
    assert record.genus == genus
    return record
