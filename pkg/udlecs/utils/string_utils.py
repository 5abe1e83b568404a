import re
from fractions import Fraction
from decimal import Decimal, ROUND_HALF_EVEN


REGION_CODE_PATTERN = re.compile(r'^[A-Z]{2}$')


class StringUtils:
    @staticmethod
    def is_valid_region(code: str) -> bool:
        # 效验地区代码格式(两位大写字母)
        if not code:
            return False
        return bool(REGION_CODE_PATTERN.fullmatch(code))

    @staticmethod
    def fraction_to_decimal(value: Fraction, places: int = 6) -> str:
        # 精确有理数只在输出时转为十进制
        quantum = Decimal(1).scaleb(-places)
        result = Decimal(value.numerator) / Decimal(value.denominator)
        return str(result.quantize(quantum, rounding=ROUND_HALF_EVEN))
