"""Census of embeddings of Cayley graphs, with a brute-force Burnside oracle."""

from ._core import (
    Instance,
    MapcensusError,
    census,
    check_fixture,
    elementary_abelian_census,
    fixture_info,
    fixtures,
    oracle,
    partitions,
    run_cli,
    sym_orientable_census,
    three_involution_census,
)

__all__ = [
    "Instance",
    "MapcensusError",
    "census",
    "check_fixture",
    "elementary_abelian_census",
    "fixture_info",
    "fixtures",
    "oracle",
    "partitions",
    "run_cli",
    "sym_orientable_census",
    "three_involution_census",
]
