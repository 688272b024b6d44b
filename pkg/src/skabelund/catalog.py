"""Catalog of subgroup families with known closed-form quotient genera.

Subgroups of the abelian square C_m x C_m = <sigma> x <tau> are parametrized
by their standard exponents (n1, n2, a): the unique triple with n1 | m,
n2 | m, 0 <= a < n2, n1*n2 | a*m such that H = <sigma^n1 tau^a, tau^n2>.
Every subgroup arises from exactly one such triple and |H| = m^2/(n1*n2).

The remaining descriptors name the non-abelian families handled by this
package: cyclic/dihedral subgroups of B0 x C_m on the Suzuki side, and
PSL(2,8) x C_n plus subgroups of N2 x C_m (N2 the order-168 normalizer of a
Sylow 2-subgroup of Ree(3)) on the Ree side.  Families whose genus formulas
exist only in earlier work (Frobenius, opposite Singer normalizer,
involution centralizer, N, and subfield-subgroup products) are deliberately
not cataloged; spectrum reports carry a completeness note to that effect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .arith import divisors
from .curves import CurveParams, Family, seven_divides_m

N2_SUBGROUP_ORDERS = (168, 56, 24, 12, 8, 4)


@dataclass(frozen=True, order=True)
class StandardExponents:
    n1: int
    n2: int
    a: int

    def validate(self, m: int) -> None:
        if not (self.n1 >= 1 and m % self.n1 == 0):
            raise ValueError(f"n1={self.n1} does not divide m={m}")
        if not (self.n2 >= 1 and m % self.n2 == 0):
            raise ValueError(f"n2={self.n2} does not divide m={m}")
        if not 0 <= self.a < self.n2:
            raise ValueError(f"a={self.a} out of range [0, {self.n2})")
        if (self.a * m) % (self.n1 * self.n2) != 0:
            raise ValueError(f"n1*n2 must divide a*m for {self}")


@dataclass(frozen=True)
class SigmaCm:
    """Subgroup of the Singer-cycle square Sigma_- x C_m, by standard exponents."""

    se: StandardExponents


@dataclass(frozen=True)
class B0Cyclic:
    """C_d x C_n inside B0 x C_m (Suzuki), d | q-1 and n | m."""

    d: int
    n: int


@dataclass(frozen=True)
class B0Dihedral:
    """D_d x C_n inside B0 x C_m (Suzuki), order 2*d*n."""

    d: int
    n: int


@dataclass(frozen=True)
class Psl28:
    """PSL(2,8) x C_n (Ree), n | m."""

    n: int


@dataclass(frozen=True)
class N2NonSkew:
    """K x C_n with K a subgroup of N2 of order 168, 56, 24, 12, 8 or 4 (Ree)."""

    k_order: int
    n: int


@dataclass(frozen=True)
class N2SkewFull:
    """<s1, s2, s3, r*tau^(i*w)> of order 56*m/(7w), requires 7w | m (Ree)."""

    i: int
    w: int


@dataclass(frozen=True)
class N2SkewCyclic:
    """<r*tau^(i*w)> of order 7*m/(7w), requires 7w | m (Ree)."""

    i: int
    w: int


SubgroupDescriptor = Union[
    SigmaCm, B0Cyclic, B0Dihedral, Psl28, N2NonSkew, N2SkewFull, N2SkewCyclic
]


@dataclass(frozen=True)
class GenusRecord:
    """One quotient curve: subgroup descriptor, |H|, different degree, genus."""

    descriptor: SubgroupDescriptor
    order: int
    delta: int
    genus: int


class NonIntegralGenusError(ArithmeticError):
    """Raised when a genus formula fails to produce an exact integer."""


def make_record(
    params: CurveParams, descriptor: SubgroupDescriptor, order: int, delta: int
) -> GenusRecord:
    """Build a GenusRecord from |H| and delta via Riemann-Hurwitz, exactly.

    ambient_degree = |H|*(2g - 2) + delta must solve for an integer g >= 0,
    and |H| must divide the full automorphism group order; anything else is
    a formula or implementation fault and aborts loudly.
    """
    remainder = params.ambient_degree - delta
    if remainder % (2 * order) != 0:
        raise NonIntegralGenusError(
            f"{descriptor}: 2|H|={2 * order} does not divide "
            f"ambient-delta={remainder}"
        )
    genus = remainder // (2 * order) + 1
    if genus < 0:
        raise NonIntegralGenusError(f"{descriptor}: negative genus {genus}")
    if delta < 0 or params.aut_order % order != 0:
        raise NonIntegralGenusError(
            f"{descriptor}: invalid order/delta pair ({order}, {delta})"
        )
    return GenusRecord(descriptor=descriptor, order=order, delta=delta, genus=genus)


def enumerate_standard_exponents(m: int) -> list[StandardExponents]:
    """All standard-exponent triples for C_m x C_m, lexicographic by (n1, n2, a).

    Exactly one triple per subgroup; the bijection with closure-enumerated
    subgroups is certified by the oracle test suite.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    divs = divisors(m)
    out = []
    for n1 in divs:
        for n2 in divs:
            n1n2 = n1 * n2
            for a in range(n2):
                if (a * m) % n1n2 == 0:
                    out.append(StandardExponents(n1, n2, a))
    return out


def subgroup_order_sigma(m: int, se: StandardExponents) -> int:
    """|H| = m^2/(n1*n2), always exact."""
    se.validate(m)
    order, rem = divmod(m * m, se.n1 * se.n2)
    assert rem == 0
    return order


def standard_exponent_elements(m: int, se: StandardExponents) -> frozenset[tuple[int, int]]:
    """Element set of <sigma^n1 tau^a, tau^n2> as exponent pairs (A, B) mod m.

    Elements are written uniquely as (sigma^n1 tau^a)^i (tau^n2)^j with
    0 <= i < m/n1 and 0 <= j < m/n2.
    """
    se.validate(m)
    n1, n2, a = se.n1, se.n2, se.a
    return frozenset(
        ((i * n1) % m, (i * a + j * n2) % m)
        for i in range(m // n1)
        for j in range(m // n2)
    )


def enumerate_descriptors(params: CurveParams) -> list[SubgroupDescriptor]:
    """All cataloged descriptors for one curve, in deterministic order."""
    out: list[SubgroupDescriptor] = [
        SigmaCm(se) for se in enumerate_standard_exponents(params.m)
    ]
    m_divs = divisors(params.m)
    if params.family is Family.SUZUKI:
        for d in divisors(params.q - 1):
            for n in m_divs:
                out.append(B0Cyclic(d, n))
        for d in divisors(params.q - 1):
            for n in m_divs:
                out.append(B0Dihedral(d, n))
    else:
        out.extend(Psl28(n) for n in m_divs)
        for k_order in N2_SUBGROUP_ORDERS:
            out.extend(N2NonSkew(k_order, n) for n in m_divs)
        if seven_divides_m(params):
            skew_ws = divisors(params.m // 7)
            for w in skew_ws:
                out.extend(N2SkewFull(i, w) for i in range(1, 7))
            for w in skew_ws:
                out.extend(N2SkewCyclic(i, w) for i in range(1, 7))
    return out
