"""Closed-form genera of Ree-family quotient curves.

Families handled: subgroups of the Singer-cycle square Sigma_- x C_m,
PSL(2,8) x C_n, the non-skew products K x C_n with K one of the six
relevant subgroups of N2 (orders 168, 56, 24, 12, 8, 4), and - when
7 | m - the skew subgroups H_{i,w} = <s1, s2, s3, r*tau^(i*w)> and
H'_{i,w} = <r*tau^(i*w)> of the order-56 group crossed with C_m.
"""

from __future__ import annotations

import math

from .catalog import (
    GenusRecord,
    N2NonSkew,
    N2SkewCyclic,
    N2SkewFull,
    NonIntegralGenusError,
    Psl28,
    SigmaCm,
    StandardExponents,
    make_record,
    subgroup_order_sigma,
)
from .curves import CurveParams, Family
from .singer import delta_sigma_cm


def _require_ree(params: CurveParams) -> None:
    if params.family is not Family.REE:
        raise ValueError(f"need Ree parameters, got {params.family.value}")


def genus_sigma_cm_ree(params: CurveParams, se: StandardExponents) -> GenusRecord:
    """Quotient by the subgroup of Sigma_- x C_m with standard exponents se."""
    _require_ree(params)
    delta = delta_sigma_cm(params, se)
    order = subgroup_order_sigma(params.m, se)
    return make_record(params, SigmaCm(se), order, delta)


def _validate_n(params: CurveParams, n: int) -> None:
    if n < 1 or params.m % n != 0:
        raise ValueError(f"n={n} does not divide m={params.m}")


def genus_psl28(params: CurveParams, n: int) -> GenusRecord:
    """Quotient by PSL(2,8) x C_n, order 504*n."""
    _require_ree(params)
    _validate_n(params, n)
    q, q0, m = params.q, params.q0, params.m
    delta = (
        63 * n * q
        + 56 * m * (q + 3 * q0 + 4)
        + 287 * n
        + 216 * (math.gcd(7, n) - 1) * m
        + (n - 1) * (q**3 + 1)
    )
    return make_record(params, Psl28(n), 504 * n, delta)


def genus_n2_nonskew(params: CurveParams, k_order: int, n: int) -> GenusRecord:
    """Quotient by K x C_n with K a subgroup of N2 of the given order."""
    _require_ree(params)
    _validate_n(params, n)
    q, q0, m = params.q, params.q0, params.m
    tau_part = (n - 1) * (q**3 + 1)
    gcd7 = math.gcd(7, n) - 1
    if k_order == 168:
        delta = 7 * n * q + 56 * m * (3 * q0 + 1) + 119 * n + 48 * gcd7 * m + tau_part
    elif k_order == 56:
        delta = 7 * n * (q + 1) + 48 * gcd7 * m + tau_part
    elif k_order == 24:
        delta = 7 * n * q + 8 * m * (3 * q0 + 1) + 23 * n + tau_part
    elif k_order == 12:
        delta = 3 * n * q + 8 * m * (3 * q0 + 1) + 11 * n + tau_part
    elif k_order == 8:
        delta = 7 * n * (q + 1) + tau_part
    elif k_order == 4:
        delta = 3 * n * (q + 1) + tau_part
    else:
        raise ValueError(f"k_order={k_order} not one of 168, 56, 24, 12, 8, 4")
    return make_record(params, N2NonSkew(k_order, n), k_order * n, delta)


def _validate_skew(params: CurveParams, i: int, w: int) -> int:
    """Check the skew preconditions and return n = m/(7w)."""
    _require_ree(params)
    if params.m % 7 != 0:
        raise ValueError(f"skew subgroups need 7 | m, but m={params.m}")
    if w < 1 or params.m % (7 * w) != 0:
        raise ValueError(f"w={w} violates 7w | m for m={params.m}")
    if not 1 <= i <= 6:
        raise ValueError(f"i={i} out of range 1..6")
    return params.m // (7 * w)


def genus_n2_skew_full(params: CurveParams, i: int, w: int) -> GenusRecord:
    """Quotient by H_{i,w} = <s1, s2, s3, r*tau^(i*w)>, order 56*m/(7w).

    The genus does not depend on i; the descriptor keeps i for bookkeeping.
    """
    n = _validate_skew(params, i, w)
    q, m = params.q, params.m
    extra = 0 if n % 7 == 0 else 48 * m
    numerator = ((q**3 + 1) * (q - n - 1) - 7 * n * (q + 1) - extra) * w
    if numerator % (16 * m) != 0:
        raise NonIntegralGenusError(f"skew full (i={i}, w={w}): non-integral genus")
    genus = numerator // (16 * m) + 1
    order = 56 * n
    delta = params.ambient_degree - order * (2 * genus - 2)
    record = make_record(params, N2SkewFull(i, w), order, delta)
    assert record.genus == genus
    return record


def genus_n2_skew_cyclic(params: CurveParams, i: int, w: int) -> GenusRecord:
    """Quotient by H'_{i,w} = <r*tau^(i*w)>, cyclic of order 7*m/(7w)."""
    n = _validate_skew(params, i, w)
    q, m = params.q, params.m
    extra = 0 if n % 7 == 0 else 6 * m
    numerator = ((q**3 + 1) * (q - n - 1) - extra) * w
    if numerator % (2 * m) != 0:
        raise NonIntegralGenusError(f"skew cyclic (i={i}, w={w}): non-integral genus")
    genus = numerator // (2 * m) + 1
    order = 7 * n
    delta = params.ambient_degree - order * (2 * genus - 2)
    record = make_record(params, N2SkewCyclic(i, w), order, delta)
    assert record.genus == genus
    return record
