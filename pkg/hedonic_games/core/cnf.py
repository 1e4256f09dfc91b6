"""
CNF 公式与赋值
DIMACS 解析、公式求值，以及归约对公式的前置假设检查
"""

import logging
import re
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hedonic_games.utils.exceptions import InvalidInputError, ParseError, PreconditionError

logger = logging.getLogger(__name__)

Literal = int
Clause = Tuple[Literal, ...]


class Valuation(BaseModel):
    """变量 1..m 的真值赋值，values[v-1] 为变量 v 的取值"""

    model_config = ConfigDict(frozen=True)

    values: Tuple[bool, ...] = Field(default_factory=tuple)

    @property
    def m(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str, m: int) -> "Valuation":
        """解析 01 串，第一个字符对应 x1"""
        bits = text.strip()
        if len(bits) != m or any(c not in "01" for c in bits):
            raise InvalidInputError(
                f"赋值应为长度 {m} 的 01 串，实际为 `{bits}`",
                details={"m": m}
            )
        return cls(values=tuple(c == "1" for c in bits))

    def value(self, variable: int) -> bool:
        if not 1 <= variable <= self.m:
            raise InvalidInputError(f"变量 {variable} 不在 1..{self.m} 内")
        return self.values[variable - 1]

    def literal(self, lit: Literal) -> bool:
        """文字在此赋值下的真值"""
        value = self.value(abs(lit))
        return value if lit > 0 else not value

    def __str__(self) -> str:
        return "".join("1" if value else "0" for value in self.values)


class CnfFormula(BaseModel):
    """m 个变量上的子句列表，文字为带符号的变量编号"""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=0, description="变量数")
    clauses: Tuple[Clause, ...] = Field(default_factory=tuple)

    @model_validator(mode="after")
    def _check_literals(self) -> "CnfFormula":
        for index, clause in enumerate(self.clauses, start=1):
            if not clause:
                raise InvalidInputError(f"第 {index} 个子句为空", details={"clause": index})
            for lit in clause:
                if lit == 0 or abs(lit) > self.m:
                    raise InvalidInputError(
                        f"第 {index} 个子句中的文字 {lit} 超出变量范围 1..{self.m}",
                        details={"clause": index, "literal": lit}
                    )
        return self

    @classmethod
    def of(cls, m: int, clauses: Sequence[Sequence[int]]) -> "CnfFormula":
        return cls(m=m, clauses=tuple(tuple(clause) for clause in clauses))

    @property
    def k(self) -> int:
        return len(self.clauses)

    def evaluate(self, valuation: Valuation) -> bool:
        if valuation.m != self.m:
            raise InvalidInputError(f"赋值变量数 {valuation.m} 与公式变量数 {self.m} 不一致")
        return all(any(valuation.literal(lit) for lit in clause) for clause in self.clauses)

    def occurs(self, lit: Literal) -> bool:
        return any(lit in clause for clause in self.clauses)

    def check_gadget_assumptions(self) -> None:
        """
        IS 归约要求：没有子句同时含 p 与 ¬p，每个变量的两种极性都出现
        违反时抛出 PreconditionError，details 中给出违反的假设
        """
        for index, clause in enumerate(self.clauses, start=1):
            for lit in clause:
                if -lit in clause:
                    raise PreconditionError(
                        f"子句 {index} 同时包含 x{abs(lit)} 与 ¬x{abs(lit)}",
                        details={"assumption": "no-complementary-pair", "clause": index, "variable": abs(lit)}
                    )
        for v in range(1, self.m + 1):
            if not self.occurs(v) or not self.occurs(-v):
                raise PreconditionError(
                    f"变量 x{v} 没有以两种极性同时出现",
                    details={"assumption": "both-polarities", "variable": v}
                )

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.m} {self.k}"]
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """解析 DIMACS CNF：c 注释行、p cnf 头、以 0 结尾的子句（可跨行）"""
    m = k = None
    clauses: List[Clause] = []
    current: List[int] = []
    header_line = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header_line is not None:
                raise ParseError("重复的 p cnf 头", line=number, column=1)
            if len(parts) != 4 or parts[1] != "cnf" or not parts[2].isdigit() or not parts[3].isdigit():
                raise ParseError(f"非法的头部 `{line}`，应为 `p cnf <m> <k>`", line=number, column=1)
            m, k = int(parts[2]), int(parts[3])
            header_line = number
            continue
        if header_line is None:
            raise ParseError("子句出现在 p cnf 头之前", line=number, column=1)
        for match in re.finditer(r"\S+", raw):
            token = match.group(0)
            column = match.start() + 1
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"非法的文字 `{token}`", line=number, column=column)
            if lit == 0:
                if not current:
                    raise ParseError("空子句", line=number, column=column)
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > m:
                raise ParseError(f"文字 {lit} 超出变量范围 1..{m}", line=number, column=column)
            else:
                current.append(lit)

    if header_line is None:
        raise ParseError("缺少 p cnf 头")
    if current:
        raise ParseError("最后一个子句没有以 0 结尾")
    if len(clauses) != k:
        raise ParseError(f"头部声明 {k} 个子句，实际 {len(clauses)} 个", line=header_line)

    formula = CnfFormula(m=m, clauses=tuple(clauses))
    logger.debug(f"DIMACS 解析完成: m={m}, k={k}")
    return formula
