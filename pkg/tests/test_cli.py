"""
CLI 测试

结果行为 key=value 文本；加 -q 时标准输出只包含结果行。
"""

import os
import sys

import pytest
import yaml
from click.testing import CliRunner

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.cli import cli, run
from sedpair.core.config import ENV_CONFIG
from sedpair.core.edge_list import read_edge_list, write_edge_list


@pytest.fixture(autouse=True)
def no_env_config(monkeypatch):
    monkeypatch.delenv(ENV_CONFIG, raising=False)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def triangle_file(tmp_path, triangle_one_negative):
    path = tmp_path / "triangle.sed"
    write_edge_list(triangle_one_negative, path)
    return path


def _lines(result):
    return [line for line in result.stdout.splitlines() if line.strip()]


# =========================================================================
# verify / construct / blowup
# =========================================================================

class TestVerify:
    def test_triangle(self, runner, triangle_file):
        result = runner.invoke(cli, ['-q', 'verify', '--in', str(triangle_file)])
        assert result.exit_code == 0
        assert _lines(result) == ['is_sed=true total=1']

    def test_lemma_and_restricted(self, runner, triangle_file):
        result = runner.invoke(cli, ['-q', 'verify', '--in', str(triangle_file), '--lemma', '--restricted'])
        assert _lines(result) == ['is_sed=true total=1 lemma=true restricted=false']

    def test_lemma_not_applicable(self, runner, tmp_path, two_edge_path):
        path = tmp_path / "path.sed"
        write_edge_list(two_edge_path, path)
        result = runner.invoke(cli, ['-q', 'verify', '--in', str(path), '--lemma'])
        assert result.exit_code == 0
        assert _lines(result) == ['is_sed=false total=0 lemma=n/a']

    def test_parse_error_exits_two(self, runner, tmp_path):
        path = tmp_path / "bad.sed"
        path.write_text("2 1\n0 1 5\n", encoding='utf-8')
        result = runner.invoke(cli, ['verify', '--in', str(path)])
        assert result.exit_code == 2

    def test_missing_file_exits_two(self, runner, tmp_path):
        result = runner.invoke(cli, ['verify', '--in', str(tmp_path / "none.sed")])
        assert result.exit_code == 2

    def test_report_table(self, runner, triangle_file):
        result = runner.invoke(cli, ['verify', '--in', str(triangle_file), '--report'])
        assert result.exit_code == 0
        assert 'SED-pair' in result.stdout
        assert result.stdout.rstrip().endswith('is_sed=true total=1')


class TestConstruct:
    def test_theorem2_report(self, runner):
        result = runner.invoke(cli, ['-q', 'construct', 'theorem2', '--pell-index', '1', '--report'])
        assert result.exit_code == 0
        line = _lines(result)[-1]
        assert line.startswith('n=61 ')
        assert ' s=-6 ' in line
        assert 'is_sed=true' in line
        assert 's_A=1 s_B=10 s_C=-7 s_x=60' in line

    def test_theorem2_out_file(self, runner, tmp_path):
        path = tmp_path / "t2.sed"
        result = runner.invoke(cli, ['-q', 'construct', 'theorem2', '--out', str(path)])
        assert result.exit_code == 0
        assert result.stdout == ''
        assert read_edge_list(path).n == 61

    def test_edge_list_on_stdout(self, runner):
        result = runner.invoke(cli, ['construct', 'complete', '--n', '3', '--weight', '-1'])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-4:] == ['3 3', '0 1 -1', '0 2 -1', '1 2 -1']

    def test_circulant_bipartite(self, runner):
        result = runner.invoke(cli, ['-q', 'construct', 'circulant-bipartite',
                                     '--a', '2', '--b', '3', '--k', '1', '--l', '1', '--report'])
        assert _lines(result)[-1] == 'n=5 m=6 s=6 is_sed=true'

    def test_invalid_spec_exits_one(self, runner):
        result = runner.invoke(cli, ['construct', 'circulant', '--a', '1', '--k', '2', '--l', '2'])
        assert result.exit_code == 1


class TestBlowup:
    def test_blowup_with_apex(self, runner, triangle_file):
        result = runner.invoke(cli, ['-q', 'blowup', '--in', str(triangle_file), '--k', '2', '--apex', '--report'])
        assert result.exit_code == 0
        assert _lines(result)[-1] == 'n=7 m=18 s=10 is_sed=true remark=true'


# =========================================================================
# 数值命令
# =========================================================================

class TestNumeric:
    def test_extremal_single(self, runner):
        result = runner.invoke(cli, ['-q', 'extremal', '--n', '4', '--e', '4', '--oracle'])
        assert _lines(result) == ['e=4 C=18 S=18 F=18 oracle=18']

    def test_extremal_all(self, runner):
        result = runner.invoke(cli, ['-q', 'extremal', '--n', '4'])
        assert len(_lines(result)) == 7

    def test_extremal_conflicting_options(self, runner):
        result = runner.invoke(cli, ['extremal', '--n', '4', '--e', '1', '--all-e'])
        assert result.exit_code == 2

    def test_bounds(self, runner):
        result = runner.invoke(cli, ['-q', 'bounds', '--count', '2'])
        assert _lines(result) == [
            'k=1 p=3 q=2 n=61 s=-6 ratio=-0.001612',
            'k=2 p=17 q=12 n=1973 s=-81056 ratio=-0.020822',
        ]

    def test_pell(self, runner):
        result = runner.invoke(cli, ['pell', '--count', '3'])
        assert _lines(result) == ['k=1 p=3 q=2', 'k=2 p=17 q=12', 'k=3 p=99 q=70']

    def test_pell_index(self, runner):
        result = runner.invoke(cli, ['pell', '--index', '4'])
        assert _lines(result) == ['k=4 p=577 q=408']

    def test_pell_zero_count(self, runner):
        assert runner.invoke(cli, ['pell', '--count', '0']).exit_code == 1

    def test_optimize_appendix_a(self, runner, tmp_path):
        result = runner.invoke(cli, ['-q', 'optimize', '--system', 'a', '--csv', str(tmp_path / "curves")])
        assert result.exit_code == 0
        fields = dict(token.split('=') for token in _lines(result)[-1].split())
        assert fields['system'] == 'a'
        assert float(fields['min']) == pytest.approx(-0.04, abs=1e-8)
        assert fields['passed'] == 'true'
        assert len(list((tmp_path / "curves").glob("*.csv"))) == 7


# =========================================================================
# gn
# =========================================================================

class TestGn:
    def test_small_order(self, runner, tmp_path):
        witness = tmp_path / "w.sed"
        result = runner.invoke(cli, ['-q', 'gn', '--n', '4', '-j', '1', '--witness', str(witness)])
        assert result.exit_code == 0
        assert _lines(result)[-1].startswith('n=4 g=0 ')
        assert read_edge_list(witness).n == 4

    def test_guard(self, runner):
        result = runner.invoke(cli, ['gn', '--n', '8'])
        assert result.exit_code == 1
        assert '8' in result.output

    def test_restricted_mode(self, runner):
        result = runner.invoke(cli, ['-q', 'gn', '--n', '3', '--mode', 'restricted', '-j', '1'])
        assert _lines(result)[-1].startswith('n=3 g=0 ')


# =========================================================================
# config
# =========================================================================

class TestConfigCommands:
    def test_show(self, runner):
        result = runner.invoke(cli, ['config', 'show'])
        assert result.exit_code == 0
        assert yaml.safe_load(result.stdout)['solver']['max_n_guard'] == 7

    def test_init_and_reuse(self, runner, tmp_path):
        path = tmp_path / "sedpair.yaml"
        assert runner.invoke(cli, ['config', 'init', str(path)]).exit_code == 0
        assert runner.invoke(cli, ['config', 'init', str(path)]).exit_code == 2
        assert runner.invoke(cli, ['config', 'init', str(path), '--force']).exit_code == 0

        path.write_text("solver:\n  max_n_guard: 4\n", encoding='utf-8')
        result = runner.invoke(cli, ['--config', str(path), 'gn', '--n', '5', '-j', '1'])
        assert result.exit_code == 1

    def test_quiet_flag_reaches_config(self, runner):
        result = runner.invoke(cli, ['-q', 'config', 'show'])
        assert result.exit_code == 0
        assert yaml.safe_load(result.stdout)['output']['quiet'] is True

    def test_missing_config_file(self, runner, tmp_path):
        result = runner.invoke(cli, ['--config', str(tmp_path / "none.yaml"), 'config', 'show'])
        assert result.exit_code == 2


def test_run_returns_exit_code():
    assert run(['pell', '--index', '1']) == 0
    assert run(['gn', '--n', '99']) == 1
