"""Tests for spectrum tables: construction, matching, CSV/JSON encoding."""

import csv
import io
import json
import math

import pytest

from gyrospec.dirac import DiracGyroParams
from gyrospec.errors import ConfigError
from gyrospec.kg import GyroParams
from gyrospec.tables import (
    CSV_COLUMNS,
    dirac_table,
    kg_table,
    rows_to_csv,
    rows_to_json,
    scan_table,
    scan_values,
)


def parse_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    return list(reader)


class TestKgTable:
    def test_l_max_zero_two_rows(self):
        rows = kg_table(GyroParams(), 0)
        assert len(rows) == 2
        assert {row.sign for row in rows} == {"+", "-"}
        assert all(abs(row.e_numeric) == 1.0 for row in rows)

    def test_spherical_l1_contains_sqrt3(self):
        rows = kg_table(GyroParams(), 1)
        target = [r for r in rows if r.l == 1 and r.m == "0" and r.sign == "+"]
        assert len(target) == 1
        assert abs(target[0].e_closed - math.sqrt(3.0)) < 1e-14
        assert target[0].rel_diff <= 1e-10

    def test_row_order(self):
        rows = kg_table(GyroParams(i3=2.0), 2)
        keys = [(r.l, float(r.m), r.sign) for r in rows]
        # l ascending, m ascending within l, '+' before '-'
        assert keys == sorted(keys, key=lambda k: (k[0], k[1], 0 if k[2] == "+" else 1))

    def test_asymmetric_rank_labels(self):
        rows = kg_table(GyroParams(i1=1.0, i2=2.0, i3=3.0), 1)
        l1 = [r for r in rows if r.l == 1 and r.sign == "+"]
        assert [r.m for r in l1] == ["0", "1", "2"]
        assert all(r.e_closed is None for r in l1)
        energies = [r.e_numeric for r in l1]
        assert energies == sorted(energies)

    def test_l_max_guard(self):
        with pytest.raises(ConfigError):
            kg_table(GyroParams(), 51)
        with pytest.raises(ConfigError):
            kg_table(GyroParams(), -1)


class TestDiracTable:
    def test_spherical_l1_magnitudes(self):
        rows = dirac_table(DiracGyroParams(GyroParams()), 1)
        mags = sorted({round(abs(r.e_numeric), 10) for r in rows if r.l == 1})
        assert mags == [round(math.sqrt(2.0), 10), round(math.sqrt(5.0), 10)]

    def test_branch_labels_present(self):
        rows = dirac_table(DiracGyroParams(GyroParams(i3=2.0)), 1)
        l1 = [r for r in rows if r.l == 1]
        assert {r.branch for r in l1} == {1, 2}
        interior = [r for r in l1 if r.m in ("-0.5", "0.5")]
        assert {r.branch for r in interior} == {1, 2}
        edge = [r for r in l1 if r.m in ("-1.5", "1.5")]
        assert {r.branch for r in edge} == {1}

    def test_closed_matches_numeric(self):
        rows = dirac_table(DiracGyroParams(GyroParams(i1=0.8, i2=0.8, i3=2.4, mass=1.7)), 4)
        for row in rows:
            assert row.rel_diff is not None and row.rel_diff <= 1e-10

    def test_asymmetric_numeric_only(self):
        rows = dirac_table(DiracGyroParams(GyroParams(i1=1.0, i2=2.0, i3=3.0)), 1)
        assert all(r.e_closed is None for r in rows)
        assert len(rows) == 4 + 12


class TestScan:
    def test_scan_values_inclusive(self):
        assert scan_values(0.5, 2.0, 0.5) == [0.5, 1.0, 1.5, 2.0]
        assert scan_values(1.0, 1.0, 0.25) == [1.0]

    def test_bad_grid(self):
        with pytest.raises(ConfigError):
            scan_values(1.0, 2.0, 0.0)
        with pytest.raises(ConfigError):
            scan_values(2.0, 1.0, 0.5)

    def test_i3_axis(self):
        params = DiracGyroParams(GyroParams())
        rows = scan_table("I3_over_I1", 0.5, 1.5, 0.5, params, 1, "kg")
        values = sorted({r.scan_value for r in rows})
        assert values == [0.5, 1.0, 1.5]
        at_one = [r for r in rows if r.scan_value == 1.0 and r.m == "0" and r.sign == "+"
                  and r.l == 1]
        assert abs(at_one[0].e_closed - math.sqrt(3.0)) < 1e-14

    def test_mass_axis_deterministic_order(self):
        params = DiracGyroParams(GyroParams())
        rows = scan_table("mass", 0.5, 1.5, 0.5, params, 0, "kg")
        assert [r.scan_value for r in rows[:2]] == [0.5, 0.5]
        assert rows[0].e_numeric == 0.5

    def test_v3_axis_forces_nonabelian_dirac(self):
        params = DiracGyroParams(GyroParams(i3=2.0))
        rows = scan_table("v3", 0.0, 1.0, 0.5, params, 1, "kg")
        assert {r.scan_value for r in rows} == {0.0, 0.5, 1.0}
        assert any(r.branch is not None for r in rows)

    def test_bad_axis(self):
        with pytest.raises(ConfigError):
            scan_table("shape", 0, 1, 0.5, DiracGyroParams(GyroParams()), 1, "kg")


class TestEncoding:
    def test_csv_header_fixed(self):
        text = rows_to_csv(kg_table(GyroParams(), 1))
        assert text.splitlines()[0] == ",".join(CSV_COLUMNS)

    def test_csv_deterministic(self):
        a = rows_to_csv(kg_table(GyroParams(i3=2.5), 3))
        b = rows_to_csv(kg_table(GyroParams(i3=2.5), 3))
        assert a == b

    def test_seventeen_significant_digits(self):
        text = rows_to_csv(kg_table(GyroParams(), 1))
        row = parse_csv(text)[2]
        value = float(row["E_numeric"])
        assert row["E_numeric"] == format(value, ".17g")

    def test_empty_closed_field(self):
        text = rows_to_csv(kg_table(GyroParams(i1=1.0, i2=2.0, i3=3.0), 1))
        records = parse_csv(text)
        assert all(rec["E_closed"] == "" for rec in records)
        assert all(rec["rel_diff"] == "" for rec in records)

    def test_json_and_csv_same_rows(self):
        rows = dirac_table(DiracGyroParams(GyroParams(i3=2.0)), 2)
        csv_records = parse_csv(rows_to_csv(rows))
        json_records = json.loads(rows_to_json(rows, {"command": "dirac"}))["rows"]
        assert len(csv_records) == len(json_records)
        for c, j in zip(csv_records, json_records):
            assert int(c["l"]) == j["l"]
            assert c["m"] == j["m"]
            assert (c["branch"] or None) == (None if j["branch"] is None else str(j["branch"]))
            assert c["sign"] == j["sign"]
            if c["E_closed"] == "":
                assert j["E_closed"] is None
            else:
                assert float(c["E_closed"]) == j["E_closed"]
            assert float(c["E_numeric"]) == j["E_numeric"]

    def test_scan_prepends_column(self):
        rows = scan_table("mass", 1.0, 1.0, 1.0, DiracGyroParams(GyroParams()), 0, "kg")
        text = rows_to_csv(rows)
        assert text.splitlines()[0] == "scan_value," + ",".join(CSV_COLUMNS)

    def test_json_meta_round_trip(self):
        payload = json.loads(rows_to_json(kg_table(GyroParams(), 0), {"command": "kg"}))
        assert payload["meta"] == {"command": "kg"}
