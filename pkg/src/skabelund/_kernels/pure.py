"""Pure-Python kernels for the brute-force oracle inner loops.

These are the fallback implementations selected when the compiled extension
is unavailable (or explicitly disabled).  Semantics are identical to the
compiled versions; the test suite cross-checks the two backends.

Subgroup closure enumeration represents a subgroup of C_m x C_m as an
m*m-bit integer (bit x*m+y set iff the element (x, y) belongs), so that
translating the whole set by a group element costs a handful of wide-int
shift/mask operations instead of one operation per member.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def sigma_cm_iota_counts(
    m: int, n1: int, n2: int, a: int, q_powers: tuple[int, ...]
) -> tuple[int, int]:
    """Classify every non-identity element of the subgroup with standard
    exponents (n1, n2, a): return (pure tau-power count, count of elements
    sigma^A tau^B with B = A*q^d mod m for some d).

    Elements are enumerated literally as (sigma^n1 tau^a)^i (tau^n2)^j over
    the fundamental domain 0 <= i < m/n1, 0 <= j < m/n2.
    """
    tau_count = 0
    special_count = 0
    for i in range(m // n1):
        a_exp = (i * n1) % m
        b_base = (i * a) % m
        if a_exp == 0:
            for j in range(m // n2):
                b_exp = (b_base + j * n2) % m
                if b_exp != 0:
                    tau_count += 1
        else:
            specials = {(a_exp * qd) % m for qd in q_powers}
            for j in range(m // n2):
                if (b_base + j * n2) % m in specials:
                    special_count += 1
    return tau_count, special_count


def congruence_count(m: int, n1: int, n2: int, rhs: int) -> int:
    """Literal count of pairs (i, j), 0 <= i < m/n1, 0 <= j < m/n2, with
    j*n2 = i*rhs (mod m).  Includes (0, 0)."""
    rhs %= m
    count = 0
    for i in range(m // n1):
        target = (i * rhs) % m
        for j in range(m // n2):
            if (j * n2) % m == target:
                count += 1
    return count


def _translate(mask: int, tx: int, ty: int, m: int, full: int, row_low) -> int:
    """Shift every set bit (x, y) of mask to (x+tx mod m, y+ty mod m)."""
    if ty:
        low = mask & row_low(ty)
        mask = ((low << ty) | ((mask ^ low) >> (m - ty))) & full
    if tx:
        shift = tx * m
        mask = ((mask << shift) | (mask >> (m - tx) * m)) & full
    return mask


def cm_subgroups(m: int) -> set[tuple[int, ...]]:
    """All subgroups of C_m x C_m by closure, as sorted tuples of x*m+y codes.

    Every subgroup of a rank-2 abelian group is generated by two elements,
    so the full set is obtained as pairwise joins of the cyclic subgroups;
    the join of subgroups of an abelian group is their sumset.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    full = (1 << (m * m)) - 1
    # column pattern: one bit at the start of each row
    pattern = sum(1 << (x * m) for x in range(m))
    low_cache: dict[int, int] = {}

    def row_low(ty: int) -> int:
        got = low_cache.get(ty)
        if got is None:
            got = low_cache[ty] = ((1 << (m - ty)) - 1) * pattern
        return got

    # cyclic subgroups, deduplicated: mask plus one generator and its order
    cyclic: dict[int, tuple[int, int, int]] = {}
    for gx in range(m):
        for gy in range(m):
            mask = 1
            x, y, order = gx, gy, 1
            while (x, y) != (0, 0):
                mask |= 1 << (x * m + y)
                x, y, order = (x + gx) % m, (y + gy) % m, order + 1
            if mask not in cyclic:
                cyclic[mask] = (gx, gy, order)

    subgroups = set(cyclic)
    entries = list(cyclic.items())
    for idx, (mask1, _) in enumerate(entries):
        for mask2, (gx, gy, order) in entries[idx:]:
            if mask1 >> ((gx * m + gy)) & 1:
                continue  # <g2> inside C1: join is C1 itself
            # join = C1 + <g2>, built by doubling the translation range
            joined = mask1
            t = 1
            while t < order:
                joined |= _translate(joined, (t * gx) % m, (t * gy) % m, m, full, row_low)
                t *= 2
            subgroups.add(joined)

    out = set()
    for mask in subgroups:
        indices = []
        while mask:
            low_bit = mask & -mask
            indices.append(low_bit.bit_length() - 1)
            mask ^= low_bit
        out.add(tuple(indices))
    return out
