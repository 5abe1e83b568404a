from fractions import Fraction
from typing import AbstractSet


class SetUtils:
    @staticmethod
    def jaccard(set1: AbstractSet, set2: AbstractSet) -> Fraction:
        "交并比，两个空集视为相同"
        union = len(set1 | set2)
        if union == 0:
            return Fraction(1)
        return Fraction(len(set1 & set2), union)
