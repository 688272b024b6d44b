"""Independent brute-force recomputation of every closed-form genus.

Nothing in this module evaluates a closed-form different degree: deltas are
obtained by literal element enumeration and per-element weights, congruence
solutions by literal pair counting, and subgroup lists by set closure.  The
only shared code with the formula modules is the iota classification layer,
which is exactly the point of contact the cross-checks are meant to pin.

The Ree(3)-side censuses are validated against explicit permutation groups:
N2 (the order-168 normalizer of a Sylow 2-subgroup of Ree(3)) acts on the
field with eight elements by semilinear affine maps x -> a*x^(2^j) + b, and
PSL(2,8) acts on the projective line over that field by fractional linear
maps.
"""

from __future__ import annotations

import math
import os
from collections import Counter

from . import _kernels
from .catalog import StandardExponents, subgroup_order_sigma
from .curves import CurveParams, Family
from .iota import OrderClassRee, OrderClassSz, iota_ree, iota_sigma_element, iota_suzuki

DEFAULT_MAX_ELEMENTS = 400_000
DEFAULT_MAX_CLOSURE_M = 60


class BruteForceCapError(ValueError):
    """Raised when an oracle run would exceed the configured brute-force cap."""


def max_elements_cap(override: int | None = None) -> int:
    """Per-subgroup element-enumeration cap (env SKABELUND_MAX_ELEMENTS)."""
    if override is not None:
        return override
    return int(os.environ.get("SKABELUND_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS))


def max_closure_m(override: int | None = None) -> int:
    """Largest m for closure subgroup enumeration (env SKABELUND_MAX_CLOSURE_M)."""
    if override is not None:
        return override
    return int(os.environ.get("SKABELUND_MAX_CLOSURE_M", DEFAULT_MAX_CLOSURE_M))


def delta_sigma_cm_bruteforce(
    params: CurveParams, se: StandardExponents, max_elements: int | None = None
) -> int:
    """Different degree of a Singer-square subgroup by element enumeration.

    Every element is materialized as (sigma^n1 tau^a)^i (tau^n2)^j and its
    weight read off the iota classification; no closed form is involved.
    """
    se.validate(params.m)
    order = subgroup_order_sigma(params.m, se)
    cap = max_elements_cap(max_elements)
    if order > cap:
        raise BruteForceCapError(f"|H|={order} exceeds brute-force cap {cap}")
    tau_count, special_count = _kernels.sigma_cm_iota_counts(
        params.m, se.n1, se.n2, se.a, params.q_powers
    )
    return tau_count * params.tau_iota + special_count * params.m


def delta_sigma_cm_direct(params: CurveParams, se: StandardExponents) -> int:
    """Kernel-free variant of delta_sigma_cm_bruteforce for small subgroups:
    sums iota_sigma_element per element, pinning the kernels to the iota
    primitive."""
    se.validate(params.m)
    m, n1, n2, a = params.m, se.n1, se.n2, se.a
    total = 0
    for i in range(m // n1):
        for j in range(m // n2):
            if i == 0 and j == 0:
                continue
            total += iota_sigma_element(params, (i * n1) % m, (i * a + j * n2) % m)
    return total


def count_congruence_solutions(
    params: CurveParams, se: StandardExponents, d: int, max_elements: int | None = None
) -> int:
    """Number of pairs (i, j) in the fundamental domain of the subgroup with
    j*n2 = i*(n1*q^d - a) (mod m), including (0, 0)."""
    se.validate(params.m)
    if not 0 <= d < len(params.q_powers):
        raise ValueError(f"d={d} out of range for {params.family.value}")
    cap = max_elements_cap(max_elements)
    if subgroup_order_sigma(params.m, se) > cap:
        raise BruteForceCapError(f"subgroup exceeds brute-force cap {cap}")
    rhs = (se.n1 * params.q_powers[d] - se.a) % params.m
    return _kernels.congruence_count(params.m, se.n1, se.n2, rhs)


def enumerate_subgroups_bruteforce(
    m: int, cap: int | None = None
) -> set[frozenset[tuple[int, int]]]:
    """All subgroups of C_m x C_m as element sets, found by set closure."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    limit = max_closure_m(cap)
    if m > limit:
        raise BruteForceCapError(f"m={m} exceeds closure cap {limit}")
    return {
        frozenset(divmod(code, m) for code in codes)
        for codes in _kernels.cm_subgroups(m)
    }


def delta_b0_census(params: CurveParams, d: int, n: int, dihedral: bool) -> int:
    """Different degree of C_d x C_n or D_d x C_n (Suzuki) by census summation.

    q-1 is odd, so the d rotation classes all have odd order dividing q-1;
    the dihedral case adds d reflection cosets of involutions.
    """
    if params.family is not Family.SUZUKI:
        raise ValueError("delta_b0_census needs Suzuki parameters")
    if (params.q - 1) % d != 0 or params.m % n != 0:
        raise ValueError(f"invalid divisors (d={d}, n={n})")
    total = sum(
        iota_suzuki(params, OrderClassSz.TAU, k) for k in range(1, n)
    )
    total += sum(
        iota_suzuki(params, OrderClassSz.DIVIDES_Q_MINUS_1, k)
        for _rot in range(d - 1)
        for k in range(n)
    )
    if dihedral:
        total += sum(
            iota_suzuki(params, OrderClassSz.ORDER2, k)
            for _refl in range(d)
            for k in range(n)
        )
    return total


def delta_census(group_tag: str, params: CurveParams, n: int) -> int:
    """Different degree of (Ree(3)-subgroup) x C_n by census summation.

    Expands each census entry over its full C_n coset: order-2 entries give
    n*(q+1) each, order-6 entries n*1, order-3 and order-9 entries their
    k=0 weight plus (n-1)*1, order-7 entries (gcd(7, n) - 1)*m.  The tau-only
    coset contributes (n-1)*(q^3+1).
    """
    from .iota import census as census_table

    if params.family is not Family.REE:
        raise ValueError("delta_census needs Ree parameters")
    if params.m % n != 0:
        raise ValueError(f"n={n} does not divide m={params.m}")
    cen = census_table(group_tag)
    total = sum(iota_ree(params, OrderClassRee.TAU, k) for k in range(1, n))
    for order, count in cen.counts:
        if order == 1:
            continue
        if order == 2:
            coset = sum(iota_ree(params, OrderClassRee.ORDER2, k) for k in range(n))
        elif order == 6:
            coset = sum(iota_ree(params, OrderClassRee.ORDER6, k) for k in range(n))
        elif order in (3, 9):
            if order == 9:
                klass = OrderClassRee.ORDER9
            elif cen.order3_central:
                klass = OrderClassRee.ORDER3_CENTRAL
            else:
                klass = OrderClassRee.ORDER3_NONCENTRAL
            coset = sum(iota_ree(params, klass, k) for k in range(n))
        elif order == 7:
            # order-7 elements: weight 0 on the whole coset unless 7 | m, in
            # which case the coset crosses gcd(7, n) - 1 special tau powers
            coset = (math.gcd(7, n) - 1) * params.m
        else:
            raise ValueError(f"unexpected element order {order} in census")
        total += count * coset
    return total


# --- F8 arithmetic and the skew-subgroup element oracle ---------------------

_F8_REDUCTION = 0b1011  # x^3 + x + 1
F8_GENERATOR = 2  # the class of x, a generator of the multiplicative group


def f8_mul(a: int, b: int) -> int:
    """Multiplication in the field with eight elements (carry-less, reduced)."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= _F8_REDUCTION
    return acc


# discrete logarithm table for F8*: _F8_LOG[g^c] = c
_F8_LOG = {}
_v = 1
for _c in range(7):
    _F8_LOG[_v] = _c
    _v = f8_mul(_v, F8_GENERATOR)
del _c, _v


def materialize_skew_subgroup(
    params: CurveParams, variant: str, i: int, w: int
) -> set[tuple[int, int, int]]:
    """Element set of H_{i,w} (variant 'full') or H'_{i,w} ('cyclic').

    Elements are triples (a, b, e) meaning the affine map x -> a*x + b on F8
    (an element of the order-56 subgroup of N2) paired with tau^e.  Closure
    of the generating set, no structure theory used.
    """
    if params.family is not Family.REE:
        raise ValueError("skew subgroups need Ree parameters")
    m = params.m
    if m % 7 != 0:
        raise ValueError("skew subgroups require 7 | m")
    if m % (7 * w) != 0:
        raise ValueError(f"w={w} violates 7w | m")
    if not 1 <= i <= 6:
        raise ValueError(f"i={i} out of range 1..6")
    if variant not in ("full", "cyclic"):
        raise ValueError(f"unknown variant {variant!r}")

    gens = [(F8_GENERATOR, 0, (i * w) % m)]
    if variant == "full":
        gens += [(1, 1, 0), (1, 2, 0), (1, 4, 0)]
    identity = (1, 0, 0)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a1, b1, e1 in frontier:
            for a2, b2, e2 in gens:
                prod = (f8_mul(a1, a2), f8_mul(a1, b2) ^ b1, (e1 + e2) % m)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def delta_skew_census(params: CurveParams, variant: str, i: int, w: int) -> int:
    """Different degree of a skew subgroup by element-level weight summation.

    Involution cosets weigh q+1 per element, pure tau powers q^3+1, and the
    order-7-bearing elements a*x+b (a = g^c != 1) reduce to the Singer-square
    weight of sigma^(c*m/7) tau^e: conjugation by a translation moves any
    such element onto r^c without touching e.
    """
    elements = materialize_skew_subgroup(params, variant, i, w)
    expected_order = (56 if variant == "full" else 7) * (params.m // (7 * w))
    assert len(elements) == expected_order, (
        f"closure produced {len(elements)} elements, expected {expected_order}"
    )
    m = params.m
    total = 0
    for a, b, e in elements:
        if a == 1:
            if b == 0:
                if e != 0:
                    total += iota_ree(params, OrderClassRee.TAU, e)
            else:
                total += iota_ree(params, OrderClassRee.ORDER2, e)
        else:
            total += iota_sigma_element(params, (_F8_LOG[a] * (m // 7)) % m, e)
    return total


# --- permutation realizations of the Ree(3)-side groups ---------------------


def _f8_frobenius(x: int, j: int) -> int:
    for _ in range(j):
        x = f8_mul(x, x)
    return x


def _affine_perm(a: int, b: int, j: int) -> tuple[int, ...]:
    """x -> a * x^(2^j) + b as a permutation of the eight field elements."""
    return tuple(f8_mul(a, _f8_frobenius(x, j)) ^ b for x in range(8))


def _f8_div(a: int, b: int) -> int:
    for k in range(8):
        if f8_mul(b, k) == a:
            return k
    raise ZeroDivisionError("division by zero in F8")


def _mobius_perm(a: int, b: int, c: int, d: int) -> tuple[int, ...]:
    """z -> (a*z + b)/(c*z + d) on the projective line over F8; 8 = infinity."""
    image = []
    for z in range(9):
        if z == 8:
            image.append(8 if c == 0 else _f8_div(a, c))
            continue
        num = f8_mul(a, z) ^ b
        den = f8_mul(c, z) ^ d
        image.append(8 if den == 0 else _f8_div(num, den))
    return tuple(image)


def _perm_closure(generators: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    degree = len(generators[0])
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[k]] for k in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def _perm_order(p: tuple[int, ...]) -> int:
    identity = tuple(range(len(p)))
    q, order = p, 1
    while q != identity:
        q = tuple(p[k] for k in q)
        order += 1
    return order


_G = F8_GENERATOR
_G2 = f8_mul(_G, _G)

# generator sets: s1, s2, s3 span the translations (the Sylow 2-subgroup),
# r is multiplication by a generator of F8* (order 7, cycles the s_i under
# conjugation), l is the Frobenius (order 3, conjugates r to r^2); the
# order-12 subgroup needs the twisted order-3 map x -> g*x^2, which
# normalizes the four translations by {0, 1, g, g+1}
_PERM_GENERATORS: dict[str, list[tuple[int, ...]]] = {
    "n2_168": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
        _affine_perm(1, _G2, 0),
        _affine_perm(_G, 0, 0),
        _affine_perm(1, 0, 1),
    ],
    "n2_56": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
        _affine_perm(1, _G2, 0),
        _affine_perm(_G, 0, 0),
    ],
    "n2_24": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
        _affine_perm(1, _G2, 0),
        _affine_perm(1, 0, 1),
    ],
    "n2_12": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
        _affine_perm(_G, 0, 1),
    ],
    "n2_8": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
        _affine_perm(1, _G2, 0),
    ],
    "n2_4": [
        _affine_perm(1, 1, 0),
        _affine_perm(1, _G, 0),
    ],
    "psl28": [
        _mobius_perm(1, 1, 0, 1),
        _mobius_perm(_G, 0, 0, 1),
        _mobius_perm(0, 1, 1, 0),
    ],
}


def realize_census(group_tag: str) -> dict[int, int]:
    """Order census of a tagged group from its permutation realization."""
    try:
        generators = _PERM_GENERATORS[group_tag]
    except KeyError:
        raise ValueError(f"unknown group tag {group_tag!r}") from None
    group = _perm_closure(generators)
    return dict(sorted(Counter(_perm_order(p) for p in group).items()))
