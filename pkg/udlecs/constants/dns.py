class DnsCodes:
    # 资源记录类型
    TYPE_A = 1
    TYPE_AAAA = 28
    TYPE_OPT = 41
    CLASS_IN = 1

    # EDNS option
    OPTION_ECS = 8
    FAMILY_IPV4 = 1
    FAMILY_IPV6 = 2

    RCODE_NOERROR = 0
    RCODE_NXDOMAIN = 3

    MAX_LABEL_LENGTH = 63
    MAX_NAME_LENGTH = 253
    MAX_POINTER_JUMPS = 64

QTYPE_BY_NAME = {
    'A': DnsCodes.TYPE_A,
    'AAAA': DnsCodes.TYPE_AAAA
}

QTYPE_BY_CODE = {code: name for name, code in QTYPE_BY_NAME.items()}

FAMILY_MAX_PREFIX = {
    DnsCodes.FAMILY_IPV4: 32,
    DnsCodes.FAMILY_IPV6: 128
}
