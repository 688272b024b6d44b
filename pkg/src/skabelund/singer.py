"""Closed-form different degree for subgroups of the Singer-cycle square.

Both curve families use the same expression; only the number of special
powers (four for Suzuki, six for Ree) and the pure-tau weight differ, and
both are carried by CurveParams.  With m = p_1^e_1 ... p_r^e_r and
nu_{d,l} = min(v_{p_l}(n1*q^d - a), v_{p_l}(n2)),

    delta = (m/n2 - 1) * (q^e + 1)
          + sum_d (m * prod_l p_l^nu_{d,l} / (n1*n2) - 1) * m,

where the d-th summand counts the subgroup elements sigma^A tau^B whose
tau-exponent hits the d-th special power A*q^d, via a prime-by-prime
congruence solution count.
"""

from __future__ import annotations

from .arith import valuation
from .catalog import StandardExponents
from .curves import CurveParams


def delta_sigma_cm(params: CurveParams, se: StandardExponents) -> int:
    """Different degree of the subgroup with standard exponents (n1, n2, a)."""
    se.validate(params.m)
    m = params.m
    n1, n2, a = se.n1, se.n2, se.a
    n1n2 = n1 * n2
    total = (m // n2 - 1) * params.tau_iota
    for qd in params.q_powers:
        # q^d may be reduced mod m: nu is capped by v_p(n2) <= v_p(m), and
        # shifting n1*q^d - a by multiples of n1*m never changes the min
        x = n1 * qd - a
        prod = 1
        for p, _e in params.m_factors:
            nu = min(valuation(p, x), valuation(p, n2))
            prod *= p ** int(nu)
        count, rem = divmod(m * prod, n1n2)
        assert rem == 0, f"congruence count {m * prod} not divisible by {n1n2}"
        total += (count - 1) * m
    return total
