"""
偏离动力学测试
"""

import pytest

from hedonic_games.core.dynamics import TerminalKind, run_dynamics, verify_trace
from hedonic_games.core.model import Partition
from hedonic_games.core.stability import DeviationKind, is_stable
from hedonic_games.utils.exceptions import InvalidInputError
from tests.conftest import EXTENDED_STALKER_CYCLE


def test_extended_stalker_cycle(extended_stalker):
    trace = run_dynamics(extended_stalker, EXTENDED_STALKER_CYCLE[0], DeviationKind.IS)
    assert trace.terminal == TerminalKind.CYCLE
    assert trace.cycle_index == 0
    assert [step.before for step in trace.steps] == EXTENDED_STALKER_CYCLE
    assert trace.final == EXTENDED_STALKER_CYCLE[0]
    assert trace.lines() == [
        "step 0: player 5 -> {1}",
        "step 1: player 3 -> {4}",
        "step 2: player 1 -> {2}",
        "step 3: player 4 -> {5}",
        "step 4: player 2 -> {3}",
        "cycle at 0",
    ]
    assert verify_trace(extended_stalker, trace)


def test_truncation(extended_stalker):
    trace = run_dynamics(extended_stalker, EXTENDED_STALKER_CYCLE[0], DeviationKind.IS, max_steps=1)
    assert trace.terminal == TerminalKind.TRUNCATED
    assert len(trace.steps) == 1
    assert trace.final == EXTENDED_STALKER_CYCLE[1]
    assert trace.lines()[-1] == "truncated"
    assert verify_trace(extended_stalker, trace)


def test_stabilizes_at_stable_start(stalker):
    start = Partition.singletons(2)
    trace = run_dynamics(stalker, start, DeviationKind.IS)
    assert trace.terminal == TerminalKind.STABILIZED
    assert trace.steps == []
    assert trace.final == start
    assert trace.lines() == ["stabilized"]


def test_stalker_ns_cycles(stalker):
    trace = run_dynamics(stalker, Partition.singletons(2), DeviationKind.NS)
    assert trace.terminal == TerminalKind.CYCLE
    assert trace.cycle_index == 0
    assert len(trace.steps) == 2
    assert trace.visited() == [Partition.singletons(2), Partition.grand(2), Partition.singletons(2)]


def test_cis_from_singletons_stabilizes(extended_stalker):
    trace = run_dynamics(extended_stalker, Partition.singletons(5), DeviationKind.CIS)
    assert trace.terminal == TerminalKind.STABILIZED
    assert len(trace.steps) <= 5 * 4
    assert is_stable(extended_stalker, trace.final, DeviationKind.CIS)


def test_verify_trace_detects_tampering(extended_stalker):
    trace = run_dynamics(extended_stalker, EXTENDED_STALKER_CYCLE[0], DeviationKind.IS)
    tampered = trace.model_copy(update={"final": EXTENDED_STALKER_CYCLE[2]})
    assert not verify_trace(extended_stalker, tampered)


@pytest.mark.parametrize("kwargs", [{"max_steps": 0}, {"rule": "random-mover"}])
def test_invalid_parameters(extended_stalker, kwargs):
    with pytest.raises(InvalidInputError):
        run_dynamics(extended_stalker, EXTENDED_STALKER_CYCLE[0], DeviationKind.IS, **kwargs)


def test_start_must_match_game(extended_stalker):
    with pytest.raises(InvalidInputError):
        run_dynamics(extended_stalker, Partition.singletons(4), DeviationKind.IS)
