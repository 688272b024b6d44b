"""Cross-checks between the pure-Python and compiled kernel backends."""

import pytest

from skabelund._kernels import available_backends
from skabelund.catalog import enumerate_standard_exponents
from skabelund.curves import Family, make_params

BACKENDS = available_backends()

pytestmark = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="compiled kernel extension not built"
)


def test_both_backends_present_by_default():
    assert "pure" in BACKENDS


def test_sigma_cm_counts_agree():
    pure, compiled = BACKENDS["pure"], BACKENDS["compiled"]
    for family, s in ((Family.SUZUKI, 1), (Family.SUZUKI, 3), (Family.REE, 2)):
        params = make_params(family, s)
        for se in enumerate_standard_exponents(params.m)[::7]:
            args = (params.m, se.n1, se.n2, se.a, params.q_powers)
            assert pure.sigma_cm_iota_counts(*args) == compiled.sigma_cm_iota_counts(
                *args
            )


def test_congruence_counts_agree():
    pure, compiled = BACKENDS["pure"], BACKENDS["compiled"]
    params = make_params(Family.REE, 2)
    for se in enumerate_standard_exponents(params.m)[::11]:
        for rhs in (0, 1, 31, 216):
            assert pure.congruence_count(
                params.m, se.n1, se.n2, rhs
            ) == compiled.congruence_count(params.m, se.n1, se.n2, rhs)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 19, 20, 25, 30])
def test_subgroup_closures_agree(m):
    assert BACKENDS["pure"].cm_subgroups(m) == BACKENDS["compiled"].cm_subgroups(m)


def test_forced_pure_selection():
    import os
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-c", "import skabelund; print(skabelund.kernel_backend)"],
        env=dict(os.environ, SKABELUND_PURE="1"),
        capture_output=True,
        text=True,
    )
    assert result.stdout.strip() == "pure"
