"""
Plucker - Scan Record and Report Tests
"""
import json

import pytest

from polynomial.qpoly import ZERO, QPolynomial
from search.records import ScanRecord, make_record, summarize, verify_record
from search.report import read_jsonl, record_line, render_csv, write_report


def P(*coeffs):
    return QPolynomial(coeffs)


@pytest.fixture
def records():
    return [
        make_record('32123', P(0, 0, 0, 1, 3, 4, 3, 1)),
        make_record('21412', P(0, 0, 1, 4, 5, 4, 5, 4, 1)),
        make_record('22', ZERO),
    ]


class TestRecords:
    def test_verdicts(self, records):
        good, bad, zero = records
        assert good.unimodal and good.strictly_unimodal and good.symmetric
        assert good.factored.to_text() == 'q^3 [3]_q [2]_q^2'
        assert not bad.unimodal
        assert zero.zero and zero.factored is None and zero.unimodal

    def test_summary_excludes_zero(self, records):
        summary = summarize('demo', records, elapsed=12.5)
        assert summary.total == 3
        assert summary.zero_count == 1
        assert summary.non_unimodal == ['21412']

    def test_summary_elapsed_only_on_request(self, records):
        summary = summarize('demo', records, elapsed=12.5)
        assert 'elapsed_ms' not in summary.to_dict()
        assert summary.to_dict(include_elapsed=True)['elapsed_ms'] == 12.5

    def test_dict_round_trip(self, records):
        for record in records:
            assert ScanRecord.from_dict(json.loads(record_line(record))) == record

    def test_verify_record(self, records):
        assert all(verify_record(r) for r in records)
        tampered = ScanRecord.from_dict({**records[1].to_dict(), 'unimodal': True})
        assert not verify_record(tampered)


class TestReports:
    def test_jsonl_round_trip(self, records, tmp_path):
        path = tmp_path / 'scan.jsonl'
        write_report(records, path, 'jsonl')
        lines = path.read_text(encoding='utf-8').splitlines()
        assert len(lines) == 3
        assert json.loads(lines[0])['polynomial'] == {'low': 3, 'coeffs': [1, 3, 4, 3, 1]}
        loaded = read_jsonl(path)
        assert loaded == records
        assert all(verify_record(r) for r in loaded)

    def test_csv(self, records):
        text = render_csv(records)
        lines = text.splitlines()
        assert lines[0] == 'descriptor,low,coeffs,unimodal,strictly_unimodal,symmetric,zero'
        assert lines[1] == '32123,3,1;3;4;3;1,true,true,true,false'
        assert lines[3] == '22,0,,true,true,true,true'

    def test_csv_file(self, records, tmp_path):
        path = tmp_path / 'scan.csv'
        write_report(records, path, 'csv')
        assert path.read_text(encoding='utf-8') == render_csv(records)

    def test_unknown_format(self, records, tmp_path):
        with pytest.raises(ValueError):
            write_report(records, tmp_path / 'x', 'xml')
