"""
Plucker - Command Line Tests
"""
import json

import pytest
from click.testing import CliRunner

from app import cli
from plucking.formulas import family_1_4k_1
from polynomial.qpoly import QPolynomial
from search.report import read_jsonl
from search.records import verify_record
from utils.helpers import set_verbose


@pytest.fixture
def runner():
    yield CliRunner(mix_stderr=False)
    set_verbose(False)


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


class TestCompute:
    def test_example(self, runner):
        result = invoke(runner, 'compute', '--tree', '(()(()()))')
        assert result.exit_code == 0
        assert result.output == '1 + 2*q + 2*q^2 + 2*q^3 + q^4\n'

    def test_single_vertex(self, runner):
        assert invoke(runner, 'compute', '--tree', '()').output == '1\n'

    def test_syntax_error(self, runner):
        result = invoke(runner, 'compute', '--tree', '(()(')
        assert result.exit_code == 2
        assert result.stderr.startswith('error: ')
        assert 'at byte 4' in result.stderr

    def test_needs_one_input(self, runner):
        assert invoke(runner, 'compute').exit_code == 2

    def test_json_round_trip(self, runner):
        result = invoke(runner, 'compute', '--tree', '(()(()()))', '--output', 'json')
        assert result.exit_code == 0
        poly = QPolynomial.from_dict(json.loads(result.output))
        assert poly == QPolynomial((1, 2, 2, 2, 1))

    def test_batch_file(self, runner, tmp_path):
        path = tmp_path / 'trees.txt'
        path.write_text('# two trees\n(()(()()))\n\n(()())\n', encoding='utf-8')
        result = invoke(runner, 'compute', '--file', str(path))
        assert result.exit_code == 0
        assert result.output.splitlines() == ['1 + 2*q + 2*q^2 + 2*q^3 + q^4', '1 + q']

    def test_unknown_flag(self, runner):
        assert invoke(runner, 'compute', '--tree', '()', '--bogus').exit_code == 2

    def test_deep_chain(self, runner):
        result = invoke(runner, 'compute', '--tree', '(' * 1200 + ')' * 1200)
        assert result.exit_code == 0
        assert result.output == '1\n'


class TestDelay:
    def test_hedgehog(self, runner):
        result = invoke(runner, 'delay', '--hedgehog', '32123')
        assert result.exit_code == 0
        assert result.output == 'q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7\n'

    def test_tree(self, runner):
        assert invoke(runner, 'delay', '--tree', '(2((3))1)').output == 'q^3\n'

    def test_run_length_shorthand(self, runner):
        result = invoke(runner, 'delay', '--hedgehog', '1^2 4^2 1^2')
        assert result.output == family_1_4k_1(2).to_text() + '\n'

    def test_zero_delay(self, runner):
        assert invoke(runner, 'delay', '--tree', '(10)').exit_code == 2

    def test_conflicting_inputs(self, runner):
        assert invoke(runner, 'delay', '--hedgehog', '1', '--tree', '(1)').exit_code == 2


class TestClosedForm:
    def test_anti_unimodal(self, runner):
        result = invoke(runner, 'closed-form', '--family', 'anti-unimodal', '--delays', '3,2,1,2,3')
        assert result.exit_code == 0
        assert result.output == 'q^3 + 3*q^4 + 4*q^5 + 3*q^6 + q^7\n'

    def test_cross_check(self, runner):
        assert invoke(runner, 'closed-form', '--family', '14k1', '--k', '2', '--cross-check').exit_code == 0
        result = invoke(runner, 'closed-form', '--family', '1a3k1b', '--a', '2', '--k', '1', '--b', '1',
                        '--cross-check')
        assert result.exit_code == 0
        assert result.output == 'q + 3*q^2 + 3*q^3 + 2*q^4 + 2*q^5 + q^6\n'

    def test_delay12(self, runner):
        result = invoke(runner, 'closed-form', '--family', 'delay12', '--delays', '212', '--cross-check')
        assert result.exit_code == 0
        assert result.output == 'q + q^2\n'

    def test_not_anti_unimodal(self, runner):
        assert invoke(runner, 'closed-form', '--family', 'anti-unimodal', '--delays', '1,2,1').exit_code == 2

    def test_missing_parameter(self, runner):
        assert invoke(runner, 'closed-form', '--family', '14k1').exit_code == 2


class TestCheckAndFactor:
    def test_non_unimodal(self, runner):
        result = invoke(runner, 'check', '--poly', '0,0,1,4,5,4,5,4,1')
        assert result.exit_code == 0
        assert result.output == 'unimodal=false strictly_unimodal=false symmetric=true\n'

    def test_unimodal(self, runner):
        result = invoke(runner, 'check', '--poly', '1,2,2,1')
        assert result.output == 'unimodal=true strictly_unimodal=true symmetric=true\n'

    def test_json(self, runner):
        result = invoke(runner, 'check', '--poly', '1,2,3', '--output', 'json')
        assert json.loads(result.output) == {'unimodal': True, 'strictly_unimodal': True, 'symmetric': False}

    def test_empty_list(self, runner):
        assert invoke(runner, 'check', '--poly', '').exit_code == 2

    def test_factor(self, runner):
        result = invoke(runner, 'factor', '--poly', '0,0,0,1,3,4,3,1')
        assert result.output == 'q^3 [3]_q [2]_q^2\n'

    def test_factor_zero(self, runner):
        assert invoke(runner, 'factor', '--poly', '0').exit_code == 2


class TestScan:
    def test_finds_counterexample(self, runner):
        result = invoke(runner, 'scan', '--max-leaves', '5', '--values', '1,2,4')
        assert result.exit_code == 1
        assert '21412' in json.loads(result.output)['non_unimodal']

    def test_report_is_reproducible(self, runner, tmp_path):
        paths = [tmp_path / f'run{i}.jsonl' for i in range(3)]
        outputs = []
        for path, jobs in zip(paths, ('1', '1', '3')):
            result = invoke(runner, 'scan', '--max-leaves', '6', '--values', '1,2',
                            '--out', str(path), '--jobs', jobs)
            assert result.exit_code == 0
            outputs.append(result.output)
        assert outputs[0] == outputs[1] == outputs[2]
        contents = [path.read_bytes() for path in paths]
        assert contents[0] == contents[1] == contents[2]
        records = read_jsonl(paths[0])
        assert len(records) == 126
        assert all(verify_record(r) for r in records)

    def test_summary_has_no_timing_by_default(self, runner):
        plain = json.loads(invoke(runner, 'scan', '--max-leaves', '3').output)
        timed = json.loads(invoke(runner, 'scan', '--max-leaves', '3', '--timing').output)
        assert 'elapsed_ms' not in plain
        assert 'elapsed_ms' in timed

    def test_csv(self, runner, tmp_path):
        path = tmp_path / 'scan.csv'
        result = invoke(runner, 'scan', '--max-leaves', '2', '--out', str(path), '--format', 'csv')
        assert result.exit_code == 0
        assert path.read_text(encoding='utf-8').splitlines()[1] == '1,0,1,true,true,true,false'

    def test_budget(self, runner):
        result = invoke(runner, 'scan', '--max-leaves', '8', '--limit', '10')
        assert result.exit_code == 2
        assert 'limit' in result.stderr

    def test_anti_unimodal_kind(self, runner):
        result = invoke(runner, 'scan', '--kind', 'anti-unimodal', '--max-leaves', '4', '--max-value', '3')
        assert result.exit_code == 0
        assert json.loads(result.output)['name'] == 'anti-unimodal'

    def test_general_trees_kind(self, runner):
        args = ('scan', '--kind', 'general-trees', '--max-leaves', '4', '--max-value', '2', '--samples', '3')
        first, second = invoke(runner, *args), invoke(runner, *args)
        assert first.output == second.output
        assert json.loads(first.output)['exploratory'] is True


class TestVerify:
    def test_conjecture(self, runner):
        result = invoke(runner, 'verify', '--suite', 'conjecture12', '--max-leaves', '8')
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data['success'] is True
        assert data['results'][0]['summary']['non_unimodal'] == []
        assert data['results'][0]['summary']['total'] == 510

    def test_writes_records(self, runner, tmp_path):
        path = tmp_path / 'c12.jsonl'
        result = invoke(runner, 'verify', '--suite', 'conjecture12', '--max-leaves', '3', '--out', str(path))
        assert result.exit_code == 0
        assert len(read_jsonl(path)) == 14

    def test_garstka(self, runner):
        assert invoke(runner, 'verify', '--suite', 'garstka').exit_code == 0

    def test_unknown_suite(self, runner):
        assert invoke(runner, 'verify', '--suite', 'nope').exit_code == 2

    def test_leaf_bound_on_fixed_suite(self, runner):
        result = invoke(runner, 'verify', '--suite', 'embedding', '--max-leaves', '5')
        assert result.exit_code == 2
        assert result.stderr.startswith('error: ')

    def test_verbose_goes_to_stderr(self, runner):
        quiet = invoke(runner, 'verify', '--suite', 'two-branch')
        loud = invoke(runner, '--verbose', 'verify', '--suite', 'two-branch')
        assert loud.output == quiet.output
        assert '✅' in loud.stderr

    def test_every_suite(self, runner):
        result = invoke(runner, 'verify', '--suite', 'paper-all')
        assert result.exit_code == 0
        assert json.loads(result.output)['success'] is True
