"""
文本格式
博弈实例文件与划分文件的解析和规范序列化

博弈文件：
    variant: BB
    players: 3
    pref 1: 2 ; 1 ; *
    pref 2: 1 3 ; 2
    pref 3: 3 ; *

`#` 之后到行尾为注释；`*` 只能作为最后一个类，展开为其余未列出的玩家。
划分文件：`{1 2} {3}`。
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from hedonic_games.core.model import GameInstance, Partition, PrefProfile, Variant
from hedonic_games.utils.exceptions import InvalidInputError, ParseError

logger = logging.getLogger(__name__)

_INT = re.compile(r"\d+")
_HEADER = re.compile(r"^\s*(\w+)\s*:\s*(.*?)\s*$")
_PREF = re.compile(r"^\s*pref\s+(\d+)\s*:(.*)$")


def _strip_comment(line: str) -> str:
    index = line.find("#")
    return line if index < 0 else line[:index]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(行号, 去注释内容)，跳过空行"""
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line.strip():
            result.append((number, line))
    return result


def _parse_header(lines: List[Tuple[int, str]], index: int, key: str) -> Tuple[int, str]:
    if index >= len(lines):
        raise ParseError(f"缺少 `{key}:` 行", line=None)
    number, line = lines[index]
    match = _HEADER.match(line)
    if not match or match.group(1) != key:
        raise ParseError(f"应为 `{key}: ...`", line=number, column=1)
    return number, match.group(2)


def _parse_id(token: str, n: int, number: int, column: int) -> int:
    if not _INT.fullmatch(token):
        raise ParseError(f"非法的玩家编号 `{token}`", line=number, column=column)
    value = int(token)
    if not 1 <= value <= n:
        raise ParseError(f"玩家编号 {value} 不在 1..{n} 内", line=number, column=column)
    return value


def _parse_pref_classes(body: str, offset: int, n: int, number: int) -> List[List[int]]:
    """解析 `c1 ; c2 ; *`，offset 为 body 在原行中的起始列（0 基）"""
    classes: List[List[int]] = []
    seen: Dict[int, int] = {}
    star_seen = False
    position = 0
    parts = body.split(";")
    for part_index, part in enumerate(parts):
        part_column = offset + position + 1
        position += len(part) + 1
        tokens = [(m.group(0), part_column + m.start()) for m in re.finditer(r"\S+", part)]
        if not tokens:
            raise ParseError("空的无差异类", line=number, column=part_column)
        if star_seen:
            raise ParseError("`*` 只能作为最后一个类", line=number, column=tokens[0][1])
        if len(tokens) == 1 and tokens[0][0] == "*":
            star_seen = True
            rest = [j for j in range(1, n + 1) if j not in seen]
            # 没有剩余玩家时 `*` 展开为空，直接忽略
            if rest:
                classes.append(rest)
                for j in rest:
                    seen[j] = part_index
            continue
        current: List[int] = []
        for token, column in tokens:
            if token == "*":
                raise ParseError("`*` 必须单独成类", line=number, column=column)
            j = _parse_id(token, n, number, column)
            if j in seen:
                raise ParseError(f"玩家 {j} 重复出现", line=number, column=column)
            seen[j] = part_index
            current.append(j)
        classes.append(current)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - set(seen))
        raise ParseError(f"偏好未覆盖玩家 {missing}", line=number, column=offset + 1)
    return classes


def parse_game(text: str, variant: Optional[Variant] = None) -> GameInstance:
    """解析博弈文件；variant 非空时覆盖文件中的扩展方式"""
    lines = _content_lines(text)
    number, raw_variant = _parse_header(lines, 0, "variant")
    try:
        file_variant = Variant(raw_variant)
    except ValueError:
        raise ParseError(f"未知的扩展方式 `{raw_variant}`", line=number, column=1)

    number, raw_players = _parse_header(lines, 1, "players")
    if not _INT.fullmatch(raw_players) or int(raw_players) < 1:
        raise ParseError(f"非法的玩家数 `{raw_players}`", line=number, column=1)
    n = int(raw_players)

    prefs: Dict[int, List[List[int]]] = {}
    for number, line in lines[2:]:
        match = _PREF.match(line)
        if not match:
            raise ParseError("应为 `pref <i>: ...`", line=number, column=1)
        i = _parse_id(match.group(1), n, number, match.start(1) + 1)
        if i in prefs:
            raise ParseError(f"玩家 {i} 的偏好重复给出", line=number, column=match.start(1) + 1)
        prefs[i] = _parse_pref_classes(match.group(2), match.start(2), n, number)
        if not any(i in cls_ for cls_ in prefs[i]):
            raise ParseError(f"玩家 {i} 的偏好中没有自己", line=number, column=1)

    missing = [i for i in range(1, n + 1) if i not in prefs]
    if missing:
        raise ParseError(f"缺少玩家 {missing} 的偏好", line=lines[-1][0] if lines else None)

    profile = PrefProfile.from_lists([prefs[i] for i in range(1, n + 1)])
    game = GameInstance.build(profile, variant or file_variant)
    logger.debug(f"解析博弈文件完成: n={n}, variant={game.variant.value}")
    return game


def format_game(game: GameInstance) -> str:
    """规范序列化：类内升序、不使用 `*`，末尾带换行"""
    lines = [f"variant: {game.variant.value}", f"players: {game.n}"]
    for i in game.players:
        body = " ; ".join(" ".join(str(j) for j in cls_) for cls_ in game.profile.classes(i))
        lines.append(f"pref {i}: {body}")
    return "\n".join(lines) + "\n"


def parse_partition(text: str, n: int) -> Partition:
    """解析 `{1 2} {3}`，块与块内顺序任意"""
    blocks: List[List[int]] = []
    current: Optional[List[int]] = None
    last_line: Optional[int] = None
    last_column: Optional[int] = None
    for number, line in _content_lines(text):
        for match in re.finditer(r"\{|\}|[^\s{}]+", line):
            token = match.group(0)
            column = match.start() + 1
            last_line, last_column = number, column
            if token == "{":
                if current is not None:
                    raise ParseError("块不能嵌套", line=number, column=column)
                current = []
            elif token == "}":
                if current is None:
                    raise ParseError("多余的 `}`", line=number, column=column)
                if not current:
                    raise ParseError("空块", line=number, column=column)
                blocks.append(current)
                current = None
            else:
                if current is None:
                    raise ParseError(f"块外出现 `{token}`", line=number, column=column)
                current.append(_parse_id(token, n, number, column))
    if current is not None:
        raise ParseError("缺少 `}`", line=last_line, column=last_column)
    if not blocks:
        raise ParseError("划分为空")
    try:
        return Partition.from_blocks(n, blocks)
    except InvalidInputError as e:
        raise ParseError(e.message, line=last_line, column=last_column, details=e.details)


def format_partition(partition: Partition) -> str:
    return str(partition)
