"""
实例生成
两个经典反例（stalker 与 extended stalker）以及带种子的随机博弈
"""

import logging
from typing import List, Optional

import numpy as np

from hedonic_games.config.settings import get_settings
from hedonic_games.core.model import GameInstance, PlayerId, PrefProfile, Variant
from hedonic_games.utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def gen_stalker(variant: Variant = Variant.BB) -> GameInstance:
    """1 只想独处，2 喜欢 1"""
    profile = PrefProfile.from_lists([
        [[1], [2]],
        [[1], [2]],
    ])
    return GameInstance.build(profile, variant)


def gen_extended_stalker(variant: Variant = Variant.BB) -> GameInstance:
    """五人严格偏好，未提及的玩家一律不可接受"""
    profile = PrefProfile.from_lists([
        [[2], [5], [1], [3], [4]],
        [[3], [1], [2], [4], [5]],
        [[4], [2], [3], [1], [5]],
        [[5], [3], [4], [1], [2]],
        [[1], [4], [5], [2], [3]],
    ])
    return GameInstance.build(profile, variant)


def _merge_ties(rng: np.random.Generator, sequence: List[PlayerId], tie_probability: float) -> List[List[PlayerId]]:
    """相邻元素以 tie_probability 的概率并入同一类"""
    draws = rng.random(max(len(sequence) - 1, 0))
    classes = [[sequence[0]]]
    for player, draw in zip(sequence[1:], draws):
        if draw < tie_probability:
            classes[-1].append(player)
        else:
            classes.append([player])
    return classes


def gen_random(
    n: int,
    variant: Variant = Variant.BB,
    tie_probability: Optional[float] = None,
    unacceptability_probability: Optional[float] = None,
    seed: Optional[int] = None,
    unique_favorite: bool = False
) -> GameInstance:
    """
    随机博弈：每个玩家均匀打乱其他玩家，各自以 unacceptability_probability
    被放到自己之后，再以 tie_probability 合并相邻的类

    抽样次数与概率参数无关，同一种子在不同参数下共享同一组排列。
    unique_favorite=True 时把并列的最爱类拆出首个玩家。
    """
    settings = get_settings().generator
    tie_probability = settings.tie_probability if tie_probability is None else tie_probability
    if unacceptability_probability is None:
        unacceptability_probability = settings.unacceptability_probability
    seed = settings.default_seed if seed is None else seed

    if n < 1:
        raise InvalidInputError(f"玩家数必须 ≥ 1，当前为 {n}")
    for name, value in (("tie_probability", tie_probability), ("unacceptability_probability", unacceptability_probability)):
        if not 0.0 <= value <= 1.0:
            raise InvalidInputError(f"{name} 必须在 [0, 1] 内，当前为 {value}", details={name: value})

    rng = np.random.default_rng(seed)
    ranks = []
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        order = [others[index] for index in rng.permutation(len(others))]
        cut = rng.random(len(others)) < unacceptability_probability
        acceptable = [j for j, out in zip(order, cut) if not out]
        unacceptable = [j for j, out in zip(order, cut) if out]
        classes = _merge_ties(rng, acceptable + [i] + unacceptable, tie_probability)
        if unique_favorite and i not in classes[0] and len(classes[0]) > 1:
            top = classes[0]
            classes = [[top[0]], top[1:]] + classes[1:]
        ranks.append(classes)

    game = GameInstance.build(PrefProfile.from_lists(ranks), variant)
    logger.debug(
        f"随机博弈: n={n}, variant={variant.value}, tie={tie_probability}, "
        f"unacceptability={unacceptability_probability}, seed={seed}"
    )
    return game
