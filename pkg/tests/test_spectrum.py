import json

import pytest

from skabelund.curves import Family
from skabelund.spectrum import (
    compute_spectrum,
    descriptor_kind,
    render_csv,
    render_json,
    render_table,
    run_oracle_suite,
    sample_evenly,
    validate_export,
    verify_tables,
)


def test_suzuki_s1_spectrum_contents():
    report = compute_spectrum(Family.SUZUKI, 1)
    assert len(report.records) == 16
    assert {2, 28, 38, 40, 92, 196} <= set(report.genera)
    assert report.genera == tuple(sorted(set(report.genera)))
    assert report.families_covered == ("sigma-cm", "b0-cyclic", "b0-dihedral")
    assert "not enumerated here" in report.completeness_note


def test_ree_s1_spectrum_contents():
    report = compute_spectrum(Family.REE, 1)
    assert {4, 445, 1433, 4393, 12942, 12951, 246051} <= set(report.genera)
    assert len(report.records) == 36


def test_family_filter():
    report = compute_spectrum(Family.SUZUKI, 1, "sigma-cm")
    assert len(report.records) == 8
    assert all(descriptor_kind(r.descriptor) == "sigma-cm" for r in report.records)
    with pytest.raises(ValueError):
        compute_spectrum(Family.SUZUKI, 1, "frobenius")


def test_rh_identity_on_every_record():
    for family, s in ((Family.SUZUKI, 3), (Family.REE, 2)):
        report = compute_spectrum(family, s)
        ambient = report.params.ambient_degree
        for r in report.records:
            assert ambient == r.order * (2 * r.genus - 2) + r.delta


def test_exports_are_deterministic():
    a = compute_spectrum(Family.REE, 2)
    b = compute_spectrum(Family.REE, 2)
    assert render_csv(a) == render_csv(b)
    assert render_json(a) == render_json(b)


def test_csv_schema():
    report = compute_spectrum(Family.SUZUKI, 1)
    lines = render_csv(report).strip().split("\n")
    assert lines[0] == (
        "family,s,q,m,descriptor_kind,param1,param2,param3,subgroup_order,delta,genus"
    )
    assert len(lines) == 1 + len(report.records)
    assert lines[1] == "suzuki,1,8,5,sigma-cm,1,1,0,25,340,2"
    b0_line = next(line for line in lines if ",b0-cyclic," in line)
    # B0 rows leave param3 empty
    assert b0_line.split(",")[7] == ""


def test_json_roundtrip_revalidates():
    report = compute_spectrum(Family.REE, 1)
    text = render_json(report)
    doc = validate_export(text)
    assert doc["family"] == "ree" and doc["m"] == 19
    assert doc["genera"] == list(report.genera)

    broken = json.loads(text)
    broken["records"][0]["genus"] += 1
    with pytest.raises(ValueError):
        validate_export(json.dumps(broken))

    stale = json.loads(text)
    stale["schema_version"] = 99
    with pytest.raises(ValueError):
        validate_export(json.dumps(stale))


def test_render_table_smoke():
    text = render_table(compute_spectrum(Family.SUZUKI, 1))
    assert "sigma-cm" in text and "spectrum:" in text


def test_verify_tables_all_pass():
    checks = verify_tables(s_max=4)
    assert len(checks) == 6
    assert all(check.ok for check in checks)


def test_verify_tables_s_max_filters():
    checks = verify_tables(s_max=1)
    assert {(c.table.source_table, c.table.s) for c in checks} == {(1, 1), (2, 1), (3, 1)}


def test_verify_tables_reports_missing_with_nearest():
    from skabelund.spectrum import ReferenceTable

    bogus = ReferenceTable(1, Family.SUZUKI, 1, (38, 42), ("sigma-cm",))
    (check,) = verify_tables(s_max=1, tables=(bogus,))
    assert not check.ok
    assert check.missing == (42,)
    assert check.nearest == (40,)  # closest genus the family actually produces


def test_sample_evenly():
    items = list(range(100))
    sampled = sample_evenly(items, 10)
    assert len(sampled) >= 10
    assert sampled[0] == 0 and sampled[-1] == 99
    assert sample_evenly(items, 200) == items


def test_oracle_suite_passes():
    for family, s in ((Family.SUZUKI, 1), (Family.REE, 1)):
        checks = run_oracle_suite(family, s)
        assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]
