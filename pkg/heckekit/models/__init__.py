from .reports import Block, BlockReport, CheckResult, JonesResult, SpechtReport, WedderburnReport

__all__ = [
    "Block",
    "BlockReport",
    "CheckResult",
    "JonesResult",
    "SpechtReport",
    "WedderburnReport",
]
