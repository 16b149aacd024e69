"""Scenario and channel-role configuration.

Nine named scenarios mirror the source numbering: four spatial (s1..s4)
and five frequency (f1..f5).  Spatial scenarios substitute one bit per
byte (bit 1 = LSB .. bit 8 = MSB); frequency scenarios substitute one
DCT coefficient per 8x8 block, addressed 1-based as (row, col).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidScenario

#: Plane indices by channel name.
RED, GREEN, BLUE = 0, 1, 2


@dataclass(frozen=True)
class ChannelRoles:
    """Assignment of the three planes to modifier / modified / unprocessed.

    The modifier plane is the watermark-bit source, the modified plane is
    the carrier, and the unprocessed plane is left alone apart from the
    photo-ID reserve region.
    """

    modifier: int = BLUE
    modified: int = RED
    unprocessed: int = GREEN

    def __post_init__(self):
        if sorted((self.modifier, self.modified, self.unprocessed)) != [0, 1, 2]:
            raise InvalidScenario("roles must assign each plane exactly once")


DEFAULT_ROLES = ChannelRoles()


@dataclass(frozen=True)
class SpatialScenario:
    """Bit-substitution scenario: which bit, and single vs XOR-dual modifier."""

    bit_index: int
    xor_dual: bool = False
    domain = "spatial"

    def __post_init__(self):
        if self.bit_index not in (1, 4, 8):
            raise InvalidScenario(f"spatial bit index must be 1, 4, or 8, got {self.bit_index}")


#: Coefficient positions a frequency scenario may target (1-based row, col).
FREQ_POSITIONS = ((1, 1), (1, 2), (3, 6), (8, 8))


@dataclass(frozen=True)
class FreqScenario:
    """Coefficient-substitution scenario: which 8x8 DCT position, single vs XOR-dual."""

    coeff_pos: tuple[int, int]
    xor_dual: bool = False
    domain = "frequency"

    def __post_init__(self):
        if tuple(self.coeff_pos) not in FREQ_POSITIONS:
            raise InvalidScenario(
                f"coefficient position must be one of {FREQ_POSITIONS}, got {self.coeff_pos}"
            )


SCENARIOS: dict[str, SpatialScenario | FreqScenario] = {
    "s1": SpatialScenario(bit_index=4),
    "s2": SpatialScenario(bit_index=1),
    "s3": SpatialScenario(bit_index=8),
    "s4": SpatialScenario(bit_index=1, xor_dual=True),
    "f1": FreqScenario(coeff_pos=(8, 8)),
    "f2": FreqScenario(coeff_pos=(1, 1)),
    "f3": FreqScenario(coeff_pos=(1, 2)),
    "f4": FreqScenario(coeff_pos=(3, 6)),
    "f5": FreqScenario(coeff_pos=(3, 6), xor_dual=True),
}

SPATIAL_NAMES = ("s1", "s2", "s3", "s4")
FREQUENCY_NAMES = ("f1", "f2", "f3", "f4", "f5")
ALL_NAMES = SPATIAL_NAMES + FREQUENCY_NAMES


def parse_scenario(name: str) -> SpatialScenario | FreqScenario:
    """Look up a scenario by its short name (s1..s4, f1..f5)."""
    try:
        return SCENARIOS[name]
    except KeyError:
        raise InvalidScenario(f"unknown scenario {name!r}; expected one of {ALL_NAMES}") from None


def scenario_name(scenario: SpatialScenario | FreqScenario) -> str:
    for name, sc in SCENARIOS.items():
        if sc == scenario:
            return name
    return repr(scenario)
