"""Exact coopetition and decisiveness indices for simple monotone games."""

from .coopetition import (
    BANZHAF,
    SHAPLEY_OWEN,
    DistributionError,
    OutsideDistribution,
    Partition2,
    PartitionDistribution,
    attitude,
    banzhaf_attitude,
    banzhaf_coopetition,
    block_interaction,
    coopetition,
    partitions2,
    shapley_owen_attitude,
    shapley_owen_coopetition,
)
from .decisiveness import (
    IndexBundle,
    block_competition,
    block_cooperation,
    competitive_index,
    cooperative_index,
    decisiveness,
    index_bundle,
)
from .game import (
    Coalition,
    GameError,
    SimpleGame,
    derivative,
    evaluate,
    is_critical,
    is_essential_critical,
    is_null_player,
    minimal_winning_coalitions,
    validate,
)
from .power import (
    generalized_shapley,
    interaction_indicator,
    profitability,
    shapley_interaction,
    shapley_values,
)

__version__ = "0.1.0"
