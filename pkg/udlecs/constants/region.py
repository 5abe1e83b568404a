class RegionData:
    # 默认地区列表(10个地区)
    DefaultRegions = [
        'AU', 'BR', 'CN', 'DE', 'HK', 'IN', 'MX', 'SG', 'UK', 'US'
    ]
    # 文档地址段优先分配，之后从 198.18.0.0/15 中按 /24 依次切分
    DocumentationPrefixes = [
        '192.0.2.0/24',
        '198.51.100.0/24',
        '203.0.113.0/24'
    ]
    BenchmarkPrefix = '198.18.0.0/15'
    CarvedPrefixLength = 24

# 域名标签 -> 地区代码
RegionAliases = {
    'au': 'AU',
    'br': 'BR',
    'cn': 'CN',
    'de': 'DE',
    'eu': 'EU',
    'fr': 'FR',
    'gb': 'UK',
    'hk': 'HK',
    'in': 'IN',
    'jp': 'JP',
    'kr': 'KR',
    'mx': 'MX',
    'ru': 'RU',
    'sg': 'SG',
    'tw': 'TW',
    'uk': 'UK',
    'us': 'US'
}
