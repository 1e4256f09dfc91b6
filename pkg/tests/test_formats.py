"""
博弈文件与划分文件格式测试
"""

import pytest
from hypothesis import given, settings

from hedonic_games.core.formats import format_game, format_partition, parse_game, parse_partition
from hedonic_games.core.model import GameInstance, Partition, Variant
from hedonic_games.utils.exceptions import ParseError
from tests.conftest import STALKER_TEXT
from tests.strategies import games

SAMPLE = """\
# 三人示例
variant: BB
players: 3
pref 1: 2 ; 1 ; *
pref 2: 3 1 ; 2     # 1 与 3 并列
pref 3: 3 ; *
"""


def test_parse_sample():
    game = parse_game(SAMPLE)
    assert game.variant == Variant.BB
    assert game.n == 3
    assert game.profile.classes(1) == ((2,), (1,), (3,))
    assert game.profile.classes(2) == ((1, 3), (2,))
    assert game.profile.classes(3) == ((3,), (1, 2))


def test_variant_override():
    assert parse_game(SAMPLE, Variant.W).variant == Variant.W


def test_format_is_canonical():
    assert format_game(parse_game(SAMPLE)) == (
        "variant: BB\n"
        "players: 3\n"
        "pref 1: 2 ; 1 ; 3\n"
        "pref 2: 1 3 ; 2\n"
        "pref 3: 3 ; 1 2\n"
    )


def test_stalker_text_roundtrip(stalker):
    assert format_game(stalker) == STALKER_TEXT
    assert parse_game(STALKER_TEXT) == stalker


def test_empty_star_is_ignored():
    game = parse_game("variant: W\nplayers: 2\npref 1: 2 ; 1 ; *\npref 2: 1 2\n")
    assert game.profile.classes(1) == ((2,), (1,))
    assert game.profile.classes(2) == ((1, 2),)


def test_error_reports_line_and_column():
    text = "variant: BB\nplayers: 3\npref 1: 2 ; 4\n"
    with pytest.raises(ParseError) as info:
        parse_game(text)
    assert info.value.line == 3
    assert info.value.column == 13
    assert str(info.value).startswith("line 3, column 13:")


@pytest.mark.parametrize("text", [
    "players: 2\nvariant: BB\n",
    "variant: XX\nplayers: 2\npref 1: 1 ; 2\npref 2: 2 ; 1\n",
    "variant: B\nplayers: 0\n",
    "variant: B\nplayers: 2\npref 1: 1 ; 2\n",
    "variant: B\nplayers: 2\npref 1: 1 ; 2\npref 1: 1 ; 2\n",
    "variant: B\nplayers: 2\npref 1: 2\npref 2: 2 ; 1\n",
    "variant: B\nplayers: 2\npref 1: 1 ; * ; 2\npref 2: 2 ; 1\n",
    "variant: B\nplayers: 2\npref 1: 1 1 ; 2\npref 2: 2 ; 1\n",
    "variant: B\nplayers: 2\npref 1: 1 ; ; 2\npref 2: 2 ; 1\n",
    "variant: B\nplayers: 2\npref 1: 1 ; 3\npref 2: 2 ; 1\n",
])
def test_malformed_games(text):
    with pytest.raises(ParseError):
        parse_game(text)


def test_parse_partition_any_order():
    p = parse_partition("{3} {2 1}\n", 3)
    assert p == Partition.from_blocks(3, [[1, 2], [3]])
    assert format_partition(p) == "{1 2} {3}"


@pytest.mark.parametrize("text", ["{1 2", "{1 2} {2 3}", "{1} 2", "{}", "", "{1 {2}} {3}", "{1 4} {2 3}"])
def test_malformed_partitions(text):
    with pytest.raises(ParseError):
        parse_partition(text, 3)


@pytest.mark.parametrize("text, line, column", [
    ("{1 2", 1, 4),
    ("{1 2}\n{2 3}\n", 2, 5),
    ("{1}\n# 注释\n{2}\n", 3, 3),
])
def test_partition_errors_report_last_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_partition(text, 3)
    assert info.value.line == line
    assert info.value.column == column
    assert info.value.details["line"] == line


@settings(max_examples=50, deadline=None)
@given(games(min_n=1, max_n=6))
def test_canonical_text_roundtrip(game: GameInstance):
    text = format_game(game)
    assert parse_game(text) == game
    assert format_game(parse_game(text)) == text
