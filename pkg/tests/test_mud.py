"""
mud: 生成、合并、ECS 折叠、缩减比例以及文档编解码
"""
import json
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from udlecs.core import EmptyDomainSet, MixedDevices, DivisionGuard, SchemaError
from udlecs.constants import RegionData
from udlecs.traffic import DomainSet
from udlecs.mud import (
    Ace, AceTemplate, MudFile, RegionDomainGroup,
    generate_mud, unify, domain_count, ecs_collapse, suggest_groups,
    reduction_ratio, overhead_ratio, mud_similarity, reduction_sweep,
    serialize_mud, parse_mud, load_mud, write_mud, parse_groups, load_groups, write_groups, groups_document,
    synthesize_region_muds
)


def random_ace(rng: random.Random) -> Ace:
    kind = rng.choice(['domain', 'domain', 'ip', 'mac'])
    if kind == 'domain':
        endpoint = f'{rng.choice(["api", "time", "cdn"])}{rng.randint(0, 5)}.{rng.choice(["eu", "us"])}.example'
    elif kind == 'ip':
        endpoint = f'10.0.{rng.randint(0, 3)}.{rng.randint(1, 254)}'
    else:
        endpoint = ':'.join(f'{rng.randrange(256):02x}' for _ in range(6))
    protocol = rng.choice(['tcp', 'udp', 'icmp', 'any'])
    if protocol == 'icmp':
        source_port = destination_port = None
    else:
        source_port = rng.choice([None, rng.randint(0, 65535)])
        destination_port = rng.choice([None, 443, 8883, rng.randint(0, 65535)])
    return Ace(
        endpoint=endpoint,
        endpoint_kind=kind,
        protocol=protocol,
        source_port=source_port,
        destination_port=destination_port,
        direction=rng.choice(['to_device', 'from_device']),
        action=rng.choice(['accept', 'accept', 'drop'])
    )


def random_mud(rng: random.Random, device_id: str = 'cam') -> MudFile:
    return MudFile(
        device_id=device_id,
        mud_url=f'https://mud.example/{device_id}-{rng.choice(["uk", "hk", "us", "de"])}.json',
        acl=tuple(random_ace(rng) for _ in range(rng.randint(0, 8)))
    )


def regional_muds(k: int, shared: int, device_id: str = 'hub'):
    "一个服务在 k 个地区各用一个域名，另有 shared 个共用域名"
    regions = RegionData.DefaultRegions[:k]
    variants = {region: f'{region.lower()}.ot.io.mi.com' for region in regions}
    shared_domains = [f'shared{n}.mi.com' for n in range(shared)]
    muds = [generate_mud([variants[region]] + shared_domains, device_id) for region in regions]
    return muds, [RegionDomainGroup(canonical_domain='ot.io.mi.com', regional_variants=variants)]


@pytest.fixture
def yi_uk(fixture_path):
    return load_mud(fixture_path('yi_uk_mud.json'))


class TestAce:

    def test_icmp_requires_any_ports(self):
        with pytest.raises(ValidationError):
            Ace(endpoint='a.x', protocol='icmp', destination_port=0)

    def test_port_range(self):
        with pytest.raises(ValidationError):
            Ace(endpoint='a.x', destination_port=65536)

    def test_endpoint_kinds(self):
        Ace(endpoint='10.0.0.1', endpoint_kind='ip')
        Ace(endpoint='00:11:22:33:44:55', endpoint_kind='mac')
        with pytest.raises(ValidationError):
            Ace(endpoint='not-an-ip', endpoint_kind='ip')
        with pytest.raises(ValidationError):
            Ace(endpoint='API.x')

    def test_duplicates_removed_and_ordered(self):
        mud = MudFile(device_id='cam', acl=(
            Ace(endpoint='b.x', destination_port=443),
            Ace(endpoint='a.x', destination_port=443),
            Ace(endpoint='a.x'),
            Ace(endpoint='b.x', destination_port=443)
        ))
        assert [(ace.endpoint, ace.destination_port) for ace in mud.acl] == [('a.x', None), ('a.x', 443), ('b.x', 443)]
        assert mud.default_action == 'drop'
        assert mud.mud_url == 'https://mud.udlecs.test/cam.json'


class TestGenerate:

    def test_yi_camera_shape(self):
        mud = generate_mud(DomainSet(members={'api.eu.xiaoyi.com'}), 'yi-camera')
        assert len(mud.acl) == 1
        ace = mud.acl[0]
        assert (ace.endpoint, ace.protocol, ace.source_port, ace.destination_port, ace.direction, ace.action) == (
            'api.eu.xiaoyi.com', 'tcp', None, 443, 'from_device', 'accept'
        )

    def test_lexicographic_order(self):
        mud = generate_mud({'c.x', 'a.x', 'b.x'}, 'cam')
        assert [ace.endpoint for ace in mud.acl] == ['a.x', 'b.x', 'c.x']

    def test_template_override(self):
        mud = generate_mud({'a.x'}, 'cam', AceTemplate(protocol='udp', destination_port=123))
        assert (mud.acl[0].protocol, mud.acl[0].destination_port) == ('udp', 123)

    def test_empty(self):
        with pytest.raises(EmptyDomainSet):
            generate_mud(DomainSet(), 'cam')


class TestUnify:

    def test_yi_camera_regions(self):
        uk = generate_mud({'api.eu.xiaoyi.com'}, 'yi-camera')
        hk = generate_mud({'api.xiaoyi.com.tw'}, 'yi-camera')
        assert unify([uk, hk]).domains == ('api.eu.xiaoyi.com', 'api.xiaoyi.com.tw')

    def test_regional_urls_do_not_depend_on_order(self):
        uk = generate_mud({'api.eu.xiaoyi.com'}, 'yi-camera', mud_url='https://mud.example/yi-uk.json')
        hk = generate_mud({'api.xiaoyi.com.tw'}, 'yi-camera', mud_url='https://mud.example/yi-hk.json')
        assert unify([uk, hk]) == unify([hk, uk])
        assert unify([uk, hk]).mud_url == 'https://mud.example/yi-hk.json'

    def test_identity_and_idempotence(self, yi_uk):
        assert unify([yi_uk]) == yi_uk
        assert unify([yi_uk, yi_uk]) == yi_uk

    def test_set_algebra(self):
        rng = random.Random(8520)
        for _ in range(200):
            a, b, c = (random_mud(rng) for _ in range(3))
            assert unify([a, unify([b, c])]) == unify([unify([a, b]), c])
            assert unify([a, b]) == unify([b, a])
            assert unify([a, a]) == unify([a])

    def test_mixed_devices(self):
        with pytest.raises(MixedDevices):
            unify([generate_mud({'a.x'}, 'cam'), generate_mud({'a.x'}, 'plug')])

    def test_nothing_to_unify(self):
        with pytest.raises(EmptyDomainSet):
            unify([])

    def test_domain_count(self):
        mud = MudFile(device_id='cam', acl=(
            Ace(endpoint='a.x'), Ace(endpoint='b.x'), Ace(endpoint='b.x', destination_port=443),
            Ace(endpoint='10.0.0.1', endpoint_kind='ip')
        ))
        assert domain_count(mud) == 2
        assert domain_count(MudFile(device_id='cam')) == 0


class TestCollapse:

    def test_xiaomi_pair(self):
        unified = generate_mud({'sg.ot.io.mi.com', 'de.ot.io.mi.com'}, 'xiaomi-plug')
        group = RegionDomainGroup(
            canonical_domain='ot.io.mi.com',
            regional_variants={'SG': 'sg.ot.io.mi.com', 'DE': 'de.ot.io.mi.com'}
        )
        collapsed, report = ecs_collapse(unified, [group])
        assert collapsed.domains == ('ot.io.mi.com',)
        assert len(collapsed.acl) == 1
        assert report.unmatched == () and report.splits == ()

    def test_empty_groups_is_identity(self, yi_uk):
        collapsed, _ = ecs_collapse(yi_uk, [])
        assert collapsed == yi_uk

    def test_ten_variants_and_two_shared(self):
        muds, groups = regional_muds(10, 2)
        unified = unify(muds)
        collapsed, _ = ecs_collapse(unified, groups)
        assert domain_count(unified) == 12
        assert domain_count(collapsed) == 3
        assert reduction_ratio(unified, collapsed) == Fraction(3, 4)

    def test_unmatched_variant_is_reported(self):
        unified = generate_mud({'sg.ot.io.mi.com'}, 'xiaomi-plug')
        group = RegionDomainGroup(
            canonical_domain='ot.io.mi.com',
            regional_variants={'SG': 'sg.ot.io.mi.com', 'DE': 'de.ot.io.mi.com'}
        )
        collapsed, report = ecs_collapse(unified, [group])
        assert report.unmatched == (('ot.io.mi.com', 'DE', 'de.ot.io.mi.com'),)
        assert collapsed.domains == ('ot.io.mi.com',)
        assert domain_count(collapsed) == domain_count(unified) == 1

    def test_disagreeing_tuples_split(self):
        unified = MudFile(device_id='cam', acl=(
            Ace(endpoint='sg.ot.io.mi.com', destination_port=443),
            Ace(endpoint='de.ot.io.mi.com', destination_port=8443)
        ))
        group = RegionDomainGroup(
            canonical_domain='ot.io.mi.com',
            regional_variants={'SG': 'sg.ot.io.mi.com', 'DE': 'de.ot.io.mi.com'}
        )
        collapsed, report = ecs_collapse(unified, [group])
        assert report.splits == (('ot.io.mi.com', 2),)
        assert [ace.destination_port for ace in collapsed.acl] == [443, 8443]
        assert domain_count(collapsed) == 1

    def test_variant_in_two_groups(self):
        groups = [
            RegionDomainGroup(canonical_domain='a.x', regional_variants={'UK': 'uk.a.x'}),
            RegionDomainGroup(canonical_domain='b.x', regional_variants={'US': 'uk.a.x'})
        ]
        with pytest.raises(SchemaError):
            ecs_collapse(generate_mud({'uk.a.x'}, 'cam'), groups)

    def test_count_never_grows_and_coverage_is_kept(self):
        rng = random.Random(33)
        groups = [
            RegionDomainGroup(canonical_domain='api0.example', regional_variants={'UK': 'api0.eu.example', 'US': 'api0.us.example'}),
            RegionDomainGroup(canonical_domain='cdn1.example', regional_variants={'UK': 'cdn1.eu.example', 'US': 'cdn1.us.example'})
        ]
        variants = {variant: group.canonical_domain for group in groups for variant in group.regional_variants.values()}
        for _ in range(300):
            unified = random_mud(rng)
            collapsed, _ = ecs_collapse(unified, groups)
            renamed = {variants.get(domain, domain) for domain in unified.domains}
            assert domain_count(collapsed) == len(renamed) <= domain_count(unified)
            if not set(unified.domains) & set(variants):
                assert collapsed == unified
            output = {(ace.endpoint, ace.rule) for ace in collapsed.acl}
            for ace in unified.acl:
                assert (variants.get(ace.endpoint, ace.endpoint), ace.rule) in output


class TestSuggestGroups:

    def test_xiaomi_pair(self):
        groups = suggest_groups({'sg.ot.io.mi.com', 'de.ot.io.mi.com'})
        assert groups == [RegionDomainGroup(
            canonical_domain='ot.io.mi.com',
            regional_variants={'DE': 'de.ot.io.mi.com', 'SG': 'sg.ot.io.mi.com'}
        )]

    def test_cross_tld_pair_is_not_grouped(self):
        assert suggest_groups({'api.xiaoyi.com.tw', 'api.eu.xiaoyi.com'}) == []

    def test_no_region_labels(self):
        assert suggest_groups(DomainSet(members={'a.x', 'b.x'})) == []

    def test_aliases(self):
        groups = suggest_groups({'api.eu.tuya.com', 'api.us.tuya.com', 'api.gb.tuya.com'}, regions=['EU', 'US', 'UK'])
        assert len(groups) == 1
        assert groups[0].canonical_domain == 'api.tuya.com'
        assert groups[0].regional_variants == {'EU': 'api.eu.tuya.com', 'UK': 'api.gb.tuya.com', 'US': 'api.us.tuya.com'}

    def test_region_filter(self):
        assert suggest_groups({'sg.ot.io.mi.com', 'de.ot.io.mi.com'}, regions=['SG']) == []


class TestMetrics:

    def test_three_to_one(self):
        muds, groups = regional_muds(3, 0)
        unified = unify(muds)
        collapsed, _ = ecs_collapse(unified, groups)
        ratio = reduction_ratio(unified, collapsed)
        assert ratio == Fraction(2, 3)
        assert ratio >= Fraction(66, 100)

    def test_equal_muds(self, yi_uk):
        assert reduction_ratio(yi_uk, yi_uk) == 0
        assert overhead_ratio(yi_uk, yi_uk) == 0

    def test_closed_form(self):
        for k in range(1, 11):
            for s in range(0, 4):
                muds, groups = regional_muds(k, s)
                unified = unify(muds)
                collapsed, _ = ecs_collapse(unified, groups)
                ratio = reduction_ratio(unified, collapsed)
                assert ratio == Fraction(k - 1, k + s)
                assert 0 <= ratio < 1

    def test_division_guard(self):
        empty = MudFile(device_id='cam')
        with pytest.raises(DivisionGuard):
            reduction_ratio(empty, empty)
        with pytest.raises(DivisionGuard):
            overhead_ratio(generate_mud({'a.x'}, 'cam'), empty)

    def test_overhead_ratio(self):
        muds, groups = regional_muds(3, 0)
        unified = unify(muds)
        collapsed, _ = ecs_collapse(unified, groups)
        assert overhead_ratio(unified, collapsed) == 2

    def test_mud_similarity(self, yi_uk):
        other = generate_mud({'api.eu.xiaoyi.com'}, 'yi-camera')
        assert mud_similarity(yi_uk, other) == Fraction(1, 2)

    def test_sweep(self):
        muds, groups = regional_muds(10, 0)
        rows = reduction_sweep(muds, groups)
        assert [row.locations_included for row in rows] == list(range(1, 11))
        assert [row.unified_domains for row in rows] == list(range(1, 11))
        assert all(row.ecs_domains == 1 for row in rows)
        assert all(row.ratio >= Fraction(66, 100) for row in rows[2:])

    def test_synthesized_muds(self):
        muds, groups = synthesize_region_muds(seed=5, services=2, shared=1)
        assert len(muds) == len(RegionData.DefaultRegions)
        unified = unify(muds)
        collapsed, report = ecs_collapse(unified, groups)
        assert domain_count(unified) == 2 * len(muds) + 1
        assert domain_count(collapsed) == 3
        assert report.unmatched == ()
        assert synthesize_region_muds(seed=5) == synthesize_region_muds(seed=5)


class TestCodec:

    def test_roundtrip(self):
        rng = random.Random(1)
        for _ in range(500):
            mud = random_mud(rng)
            data = serialize_mud(mud)
            assert parse_mud(data) == mud
            assert serialize_mud(parse_mud(data)) == data

    def test_fixture_document(self, yi_uk, fixture_path):
        assert yi_uk.device_id == 'yi-camera'
        assert [(ace.endpoint, ace.protocol, ace.destination_port) for ace in yi_uk.acl] == [
            ('api.eu.xiaoyi.com', 'tcp', 443), ('pool.ntp.org', 'udp', 123)
        ]
        with open(fixture_path('yi_uk_mud.json'), 'rb') as f:
            assert serialize_mud(yi_uk) == f.read()

    def test_missing_direction(self, fixture_path):
        with pytest.raises(SchemaError) as info:
            load_mud(fixture_path('mud_missing_direction.json'))
        assert 'matches/direction' in str(info.value)

    def test_invalid_json(self):
        with pytest.raises(SchemaError):
            parse_mud(b'{"ietf-mud:mud": ')

    def test_bad_endpoint_has_path(self, yi_uk):
        document = json.loads(serialize_mud(yi_uk))
        document['ietf-access-control-list:acls']['acl'][0]['aces']['ace'][1]['matches']['legitimate_endpoint']['kind'] = 'ip'
        with pytest.raises(SchemaError) as info:
            parse_mud(json.dumps(document))
        assert 'ace/1' in str(info.value)

    def test_write_and_load(self, tmp_path, yi_uk):
        path = str(tmp_path / 'out' / 'mud.json')
        write_mud(yi_uk, path)
        assert load_mud(path) == yi_uk

    def test_groups_file(self, tmp_path, fixture_path):
        groups = load_groups(fixture_path('xiaomi_groups.json'))
        assert groups[0].regional_variants == {'DE': 'de.ot.io.mi.com', 'SG': 'sg.ot.io.mi.com'}
        assert load_groups(fixture_path('groups_empty.json')) == []
        path = str(tmp_path / 'groups.json')
        write_groups(groups, path)
        assert load_groups(path) == groups
        with open(path, 'r', encoding='utf-8') as f:
            assert json.load(f) == groups_document(groups)

    def test_groups_with_duplicate_variants(self):
        text = json.dumps({'groups': [{'canonical_domain': 'a.x', 'regional_variants': {'UK': 'a.x', 'US': 'a.x'}}]})
        with pytest.raises(SchemaError):
            parse_groups(text)
