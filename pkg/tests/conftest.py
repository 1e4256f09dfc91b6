"""
测试共享夹具
"""

import pytest

from hedonic_games.core.generators import gen_extended_stalker, gen_stalker
from hedonic_games.core.model import GameInstance, Partition, PrefProfile, Variant
from hedonic_games.services.game_service import GameService

STALKER_TEXT = """\
variant: BB
players: 2
pref 1: 1 ; 2
pref 2: 1 ; 2
"""

# 1: 2 > 3 > 1 > 4，其余玩家只接受自己
EXAMPLE_LISTS = [
    [[2], [3], [1], [4]],
    [[2], [1, 3, 4]],
    [[3], [1, 2, 4]],
    [[4], [1, 2, 3]],
]

EXTENDED_STALKER_CYCLE = [
    Partition.from_blocks(5, [[1], [2, 3], [4, 5]]),
    Partition.from_blocks(5, [[5, 1], [2, 3], [4]]),
    Partition.from_blocks(5, [[5, 1], [2], [3, 4]]),
    Partition.from_blocks(5, [[1, 2], [3, 4], [5]]),
    Partition.from_blocks(5, [[1, 2], [3], [4, 5]]),
]


@pytest.fixture
def stalker() -> GameInstance:
    return gen_stalker()


@pytest.fixture
def extended_stalker() -> GameInstance:
    return gen_extended_stalker()


@pytest.fixture
def example_profile() -> PrefProfile:
    return PrefProfile.from_lists(EXAMPLE_LISTS)


@pytest.fixture
def example_game(example_profile):
    """按扩展方式构造示例博弈"""
    def build(variant: Variant) -> GameInstance:
        return GameInstance.build(example_profile, variant)
    return build


@pytest.fixture
def service() -> GameService:
    return GameService()


@pytest.fixture
def write_file(tmp_path):
    """把文本写入临时文件并返回路径字符串"""
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
