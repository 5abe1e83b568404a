"""
命令行: 输出内容与退出码
"""
import os
import json
import logging

import pytest
from click.testing import CliRunner

from udlecs.cli import cli
from udlecs.constants import RegionData
from udlecs.mud import RegionDomainGroup, generate_mud, write_groups, write_mud
from udlecs.core.logger import LOGGER_NAME


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_console_handler():
    yield
    # CliRunner 的输出流在调用结束后关闭
    logging.getLogger(LOGGER_NAME).handlers.clear()


def read_text(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


class TestCommandGroups:

    def test_help_lists_every_group(self, runner):
        result = runner.invoke(cli, ['--help'])
        assert result.exit_code == 0
        for group in ('analyze', 'mud', 'scenario', 'synth'):
            assert group in result.stdout

    @pytest.mark.parametrize('group', ['analyze', 'mud', 'scenario', 'synth'])
    def test_group_help(self, runner, group):
        result = runner.invoke(cli, [group, '--help'])
        assert result.exit_code == 0
        assert 'Usage' in result.stdout


class TestScenarioCommands:

    def test_standard_run(self, runner, fixture_path):
        result = runner.invoke(cli, ['scenario', 'run', fixture_path('scenario_standard.json')])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == 'hop_index,sender,receiver,qname,ecs_family,ecs_prefix,ecs_address,answer_ips,scope'
        assert lines[1].startswith('0,device,resolver,api.example.iot')
        assert '10.1.0.1' in lines[-1]
        assert lines[-1].split(',')[2] == 'device'

    def test_user_defined_run(self, runner, fixture_path):
        result = runner.invoke(cli, ['scenario', 'run', fixture_path('scenario_ecs_user_defined.json')])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == '3,resolver,device,api.example.iot,1,24,198.18.5.0,10.1.0.1,24'

    def test_run_writes_out_file(self, runner, fixture_path, tmp_path):
        out = tmp_path / 'transcript.csv'
        result = runner.invoke(cli, ['scenario', 'run', fixture_path('scenario_standard.json'), '--out', str(out)])
        assert result.exit_code == 0
        assert result.stdout == ''
        assert read_text(out).startswith('hop_index,')

    def test_missing_scenario_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(cli, ['scenario', 'run', str(tmp_path / 'absent.json')])
        assert result.exit_code == 2

    def test_probe_forwarding_preset(self, runner):
        result = runner.invoke(cli, ['scenario', 'probe', '--preset', 'google'])
        assert result.exit_code == 0
        header, row = result.stdout.splitlines()
        assert header == 'preset,policy,sent,received,echoed,forwarded,echo_matches'
        assert row.startswith('google,')
        assert row.endswith('True,True')

    def test_probe_stripping_preset(self, runner):
        result = runner.invoke(cli, ['scenario', 'probe', '--preset', 'cloudflare'])
        assert result.exit_code == 0
        assert ',False,' in result.stdout.splitlines()[1]


class TestAnalyzeCommands:

    def test_uds_of_yi_camera(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'uds', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--ipl', 'HK', '--first', 'HK', '--second', 'UK'
        ])
        assert result.exit_code == 0
        assert result.stdout == 'device_id,ip_based_location,first,second,uds\nyi-camera,HK,HK,UK,0.000000\n'

    def test_ipbs_of_yi_camera(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'ipbs', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--udl', 'UK', '--first', 'HK', '--second', 'UK'
        ])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1].endswith(',1.000000')

    def test_empty_selection_exit_code(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'uds', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--ipl', 'US', '--first', 'HK', '--second', 'UK'
        ])
        assert result.exit_code == 4
        assert result.stdout == ''

    def test_matrix_of_identical_regions(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'matrix', '--log', fixture_path('yi_camera.log'), '--device', 'plug',
            '--fixed', 'UK', '--regions', 'UK,UK'
        ])
        assert result.exit_code == 0
        assert result.stdout == 'region,UK,UK\nUK,1.000000,1.000000\nUK,1.000000,1.000000\n'

    def test_matrix_needs_two_regions(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'matrix', '--log', fixture_path('yi_camera.log'), '--device', 'plug',
            '--fixed', 'UK', '--regions', 'UK'
        ])
        assert result.exit_code == 2

    def test_cumulative_series(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'cumulative', '--log', fixture_path('yi_camera.log'), '--device', 'plug',
            '--ipl', 'UK', '--udl', 'UK'
        ])
        assert result.exit_code == 0
        assert result.stdout == 'bucket_end,unique_domains,unique_ips\n1700086640,2,3\n'

    def test_impact_with_cdf(self, runner, fixture_path, tmp_path):
        cdf = tmp_path / 'cdf.csv'
        result = runner.invoke(cli, [
            'analyze', 'impact', '--log', fixture_path('yi_camera.log'),
            '--first', 'HK', '--second', 'UK', '--cdf-out', str(cdf)
        ])
        assert result.exit_code == 0
        assert result.stdout == (
            'device_id,uds_HK,uds_UK,ipbs_HK,ipbs_UK,max_domains\n'
            'yi-camera,0.000000,0.000000,1.000000,1.000000,1\n'
        )
        assert read_text(cdf) == (
            'metric,value,cumulative_fraction\n'
            'uds_HK,0.000000,1.000000\n'
            'uds_UK,0.000000,1.000000\n'
            'ipbs_HK,1.000000,1.000000\n'
            'ipbs_UK,1.000000,1.000000\n'
        )

    def test_invalid_log_reports_line(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'analyze', 'uds', '--log', fixture_path('bad_region.log'), '--device', 'hub',
            '--ipl', 'US', '--first', 'US', '--second', 'UK'
        ])
        assert result.exit_code == 3
        assert 'line 2' in result.stderr
        assert result.stdout == ''

    def test_report_file(self, runner, fixture_path, tmp_path):
        report = tmp_path / 'report.json'
        result = runner.invoke(cli, [
            '--report', str(report),
            'analyze', 'uds', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--ipl', 'HK', '--first', 'HK', '--second', 'UK'
        ])
        assert result.exit_code == 0
        data = json.loads(read_text(report))
        assert data['exit_code'] == 0
        assert data['summary'] == {'uds': '0'}
        assert fixture_path('yi_camera.log') in data['input_digests']

    def test_report_records_failure(self, runner, fixture_path, tmp_path):
        report = tmp_path / 'report.json'
        runner.invoke(cli, [
            '--report', str(report),
            'analyze', 'uds', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--ipl', 'US', '--first', 'HK', '--second', 'UK'
        ])
        assert json.loads(read_text(report))['exit_code'] == 4


class TestMudCommands:

    def test_unify_single_file_is_identity(self, runner, fixture_path):
        result = runner.invoke(cli, ['mud', 'unify', fixture_path('yi_uk_mud.json')])
        assert result.exit_code == 0
        assert result.stdout == read_text(fixture_path('yi_uk_mud.json'))

    def test_collapse_without_groups_is_identity(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'mud', 'collapse', fixture_path('yi_uk_mud.json'), '--groups', fixture_path('groups_empty.json')
        ])
        assert result.exit_code == 0
        assert result.stdout == read_text(fixture_path('yi_uk_mud.json'))

    def test_generate_from_log(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'mud', 'generate', '--log', fixture_path('yi_camera.log'), '--device', 'plug',
            '--ipl', 'UK', '--udl', 'UK'
        ])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        text = json.dumps(document)
        assert 'a.tplink.example' in text
        assert 'b.tplink.example' in text

    def test_generate_from_empty_selection(self, runner, fixture_path):
        result = runner.invoke(cli, [
            'mud', 'generate', '--log', fixture_path('yi_camera.log'), '--device', 'yi-camera',
            '--ipl', 'US', '--udl', 'US'
        ])
        assert result.exit_code == 6

    def test_unify_mixed_devices(self, runner, fixture_path, tmp_path):
        other = tmp_path / 'other.json'
        other.write_text(read_text(fixture_path('yi_uk_mud.json')).replace('yi-camera', 'other-camera'), encoding='utf-8')
        result = runner.invoke(cli, ['mud', 'unify', fixture_path('yi_uk_mud.json'), str(other)])
        assert result.exit_code == 5
        assert result.stdout == ''

    def test_similarity_with_itself(self, runner, fixture_path):
        path = fixture_path('yi_uk_mud.json')
        result = runner.invoke(cli, ['mud', 'similarity', path, path])
        assert result.exit_code == 0
        assert result.stdout == 'similarity\n1.000000\n'

    def test_compare_synthesized_muds(self, runner, tmp_path):
        out_dir = tmp_path / 'muds'
        result = runner.invoke(cli, ['--seed', '3', 'synth', 'muds', '--out', str(out_dir), '--regions', 'HK,UK,US'])
        assert result.exit_code == 0
        assert sorted(os.listdir(out_dir)) == ['HK.json', 'UK.json', 'US.json', 'groups.json']
        paths = [str(out_dir / f'{region}.json') for region in ('HK', 'UK', 'US')]
        result = runner.invoke(cli, ['mud', 'compare', *paths, '--groups', str(out_dir / 'groups.json')])
        assert result.exit_code == 0
        assert result.stdout == (
            'locations_included,unified_domains,ecs_domains,ratio\n'
            '1,3,3,0.000000\n'
            '2,5,3,0.400000\n'
            '3,7,3,0.571429\n'
        )

    def test_suggest_recovers_synthesized_groups(self, runner, tmp_path):
        out_dir = tmp_path / 'muds'
        runner.invoke(cli, ['synth', 'muds', '--out', str(out_dir), '--regions', 'DE,SG'])
        result = runner.invoke(cli, ['mud', 'suggest', str(out_dir / 'DE.json'), str(out_dir / 'SG.json')])
        assert result.exit_code == 0
        suggested = json.loads(result.stdout)['groups']
        expected = json.loads(read_text(out_dir / 'groups.json'))['groups']
        assert sorted(suggested, key=lambda group: group['canonical_domain']) == \
            sorted(expected, key=lambda group: group['canonical_domain'])

    def test_compare_ten_regions_xiaomi_shape(self, runner, tmp_path):
        regions = list(RegionData.DefaultRegions)
        groups = [
            RegionDomainGroup(
                canonical_domain=canonical,
                regional_variants={region: f'{region.lower()}.{canonical}' for region in regions}
            )
            for canonical in ('ot.io.mi.com', 'api.io.mi.com')
        ]
        paths = []
        for region in regions:
            path = str(tmp_path / f'{region}.json')
            domains = [group.regional_variants[region] for group in groups] + ['account.xiaomi.com']
            write_mud(generate_mud(domains, 'mi-plug', mud_url=f'https://mud.example/mi-{region.lower()}.json'), path)
            paths.append(path)
        write_groups(groups, str(tmp_path / 'groups.json'))
        result = runner.invoke(cli, ['mud', 'compare', *paths, '--groups', str(tmp_path / 'groups.json')])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == 'locations_included,unified_domains,ecs_domains,ratio'
        rows = [line.split(',') for line in lines[1:]]
        assert [int(row[0]) for row in rows] == list(range(1, 11))
        assert [int(row[1]) for row in rows] == [2 * k + 1 for k in range(1, 11)]
        assert {row[2] for row in rows} == {'3'}
        assert rows[3][3] == '0.666667'
        assert rows[9][3] == '0.857143'
        assert all(float(row[3]) >= 0.66 for row in rows[3:])


class TestSynthCommands:

    def test_log_is_deterministic(self, runner):
        first = runner.invoke(cli, ['--seed', '11', 'synth', 'log', '--devices', '3', '--days', '2'])
        second = runner.invoke(cli, ['--seed', '11', 'synth', 'log', '--devices', '3', '--days', '2'])
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert first.stdout.startswith('ts=')

    def test_log_depends_on_seed(self, runner):
        first = runner.invoke(cli, ['--seed', '1', 'synth', 'log'])
        second = runner.invoke(cli, ['--seed', '2', 'synth', 'log'])
        assert first.stdout != second.stdout

    def test_invalid_region_is_usage_error(self, runner):
        result = runner.invoke(cli, ['synth', 'log', '--regions', 'HK,usa'])
        assert result.exit_code == 2


class TestInternalError:

    def test_unexpected_exception_writes_error_file(self, runner, fixture_path, tmp_path, monkeypatch):
        def broken(first, second):
            raise RuntimeError('boom')

        monkeypatch.setattr('udlecs.cli.mud_cmds.mud_similarity', broken)
        path = fixture_path('yi_uk_mud.json')
        result = runner.invoke(cli, ['mud', 'similarity', path, path])
        assert result.exit_code == 70
        assert 'error id' in result.stderr
        error_dir = tmp_path / 'logs' / 'error'
        files = os.listdir(error_dir)
        assert len(files) == 1
        content = read_text(error_dir / files[0])
        assert 'RuntimeError' in content
        assert 'mud similarity' in content
