"""
hypothesis 策略：随机偏好排序与博弈实例
"""

from hypothesis import strategies as st

from hedonic_games.core.generators import gen_random
from hedonic_games.core.model import GameInstance, PrefProfile, Variant

variants = st.sampled_from(list(Variant))


@st.composite
def player_classes(draw, n: int, i: int, allow_ties: bool = True, allow_unacceptable: bool = True):
    """玩家 i 的无差异类序列"""
    order = draw(st.permutations(list(range(1, n + 1))))
    if not allow_unacceptable:
        # 自己排到最后
        order = [j for j in order if j != i] + [i]
    classes = [[order[0]]]
    for j in order[1:]:
        if allow_ties and draw(st.booleans()):
            classes[-1].append(j)
        else:
            classes.append([j])
    return classes


@st.composite
def profiles(draw, min_n: int = 1, max_n: int = 5, allow_ties: bool = True, allow_unacceptable: bool = True):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    lists = [
        draw(player_classes(n, i, allow_ties=allow_ties, allow_unacceptable=allow_unacceptable))
        for i in range(1, n + 1)
    ]
    return PrefProfile.from_lists(lists)


@st.composite
def games(draw, min_n: int = 1, max_n: int = 5, variant=None, **kwargs):
    profile = draw(profiles(min_n=min_n, max_n=max_n, **kwargs))
    chosen = variant if variant is not None else draw(variants)
    return GameInstance.build(profile, chosen)


@st.composite
def seeded_games(draw, min_n: int = 1, max_n: int = 6, variant=None, **kwargs):
    """通过 numpy 生成器抽样，hypothesis 只负责挑种子与规模"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    chosen = variant if variant is not None else draw(variants)
    return gen_random(n, variant=chosen, seed=seed, **kwargs)
