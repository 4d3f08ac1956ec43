"""
Plucker - Report Files
JSON Lines and CSV scan reports, plus the one-object summary
"""
import csv
import io
import json

from search.records import ScanRecord
from utils.helpers import format_bool

CSV_COLUMNS = ['descriptor', 'low', 'coeffs', 'unimodal', 'strictly_unimodal', 'symmetric', 'zero']


def record_line(record):
    """One JSONL line (no trailing newline)"""
    return json.dumps(record.to_dict())


def write_jsonl(records, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        for record in records:
            handle.write(record_line(record) + '\n')


def read_jsonl(path):
    """Parse a JSONL report back into ScanRecords"""
    with open(path, encoding='utf-8') as handle:
        return [ScanRecord.from_dict(json.loads(line)) for line in handle if line.strip()]


def csv_row(record):
    poly = record.polynomial.to_dict()
    return [
        record.input_descriptor,
        poly['low'],
        ';'.join(str(c) for c in poly['coeffs']),
        format_bool(record.unimodal),
        format_bool(record.strictly_unimodal),
        format_bool(record.symmetric),
        format_bool(record.zero),
    ]


def render_csv(records):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(csv_row(record))
    return buffer.getvalue()


def write_csv(records, path):
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        handle.write(render_csv(records))


def write_report(records, path, fmt='jsonl'):
    """
    Write records in the requested format

    Args:
        records: ScanRecords in canonical order
        path: Output file
        fmt: 'jsonl' or 'csv'
    """
    if fmt == 'jsonl':
        write_jsonl(records, path)
    elif fmt == 'csv':
        write_csv(records, path)
    else:
        raise ValueError(f'unknown report format {fmt!r}')


def summary_json(data):
    """Serialize a summary dict on one line with stable key order"""
    return json.dumps(data)
