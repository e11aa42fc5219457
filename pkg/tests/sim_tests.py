# -*- coding: utf-8; -*-

from fractions import Fraction

import pytest

from lclbench.algorithms.generic import GenericProgram, generic_params
from lclbench.exc import SimulationError
from lclbench.families import lower_bound_graph
from lclbench.sim import (ON_MESSAGE, NodeProgram, RunTrace, Step, locality_audit,
                          node_averaged, run, trace_from_schedule, worst_case)
from lclbench.tree import build_tree, path_graph


class Constant(NodeProgram):
    name = 'constant'

    def init(self, view):
        return view.id

    def step(self, rnd, state, inbox):
        return Step(state, {}, 'x')


class MaxOfNeighbours(NodeProgram):
    """Leaves answer at once, inner nodes one round later with the largest id seen."""

    name = 'max-of-neighbours'

    def init(self, view):
        return {'id': view.id, 'ports': view.ports, 'leaf': view.degree <= 1}

    def step(self, rnd, state, inbox):
        if rnd == 0:
            messages = dict((u, state['id']) for u in state['ports'])
            return Step(state, messages, state['id'] if state['leaf'] else None)
        return Step(state, {}, max([state['id']] + list(inbox.values())))


class WaitForId(NodeProgram):
    name = 'wait'

    def init(self, view):
        return view.id

    def step(self, rnd, state, inbox):
        return Step(state, {}, 'done' if rnd == state else None)


class SleepUntilId(NodeProgram):
    """Like WaitForId but sleeps through the rounds in between."""

    name = 'sleep'

    def __init__(self):
        self.calls = []

    def init(self, view):
        return view.id

    def step(self, rnd, state, inbox):
        self.calls.append((rnd, state))
        if rnd == state:
            return Step(state, {}, 'done')
        return Step(state, {}, wake=state)


class Relay(NodeProgram):
    """Node 0 starts a token in round 2; the others wait for it."""

    name = 'relay'

    def __init__(self):
        self.calls = []

    def init(self, view):
        return view

    def step(self, rnd, view, inbox):
        self.calls.append((rnd, view.index))
        if view.index == 0:
            if rnd < 2:
                return Step(view, {}, wake=2)
            return Step(view, dict((u, rnd) for u in view.ports), rnd)
        if not inbox:
            return Step(view, {}, wake=ON_MESSAGE)
        onward = dict((u, rnd) for u in view.ports if u not in inbox)
        return Step(view, onward, rnd)


class Backwards(NodeProgram):
    name = 'backwards'

    def init(self, view):
        return None

    def step(self, rnd, state, inbox):
        return Step(state, {}, wake=rnd)


class Deaf(NodeProgram):
    name = 'deaf'

    def init(self, view):
        return None

    def step(self, rnd, state, inbox):
        return Step(state, {}, wake=ON_MESSAGE)


class Stray(NodeProgram):
    name = 'stray'

    def init(self, view):
        return view.index

    def step(self, rnd, state, inbox):
        return Step(state, {state + 2: 'hi'})


class Forever(NodeProgram):
    name = 'forever'

    def init(self, view):
        return None

    def step(self, rnd, state, inbox):
        return Step(state)


class GlobalMax(NodeProgram):
    """Cheats: every node outputs the largest id of the whole tree."""

    name = 'global-max'

    def __init__(self):
        self.seen = []

    def init(self, view):
        self.seen.append(view.id)

    def step(self, rnd, state, inbox):
        return Step(state, {}, max(self.seen))


def star():
    return build_tree([(0, 1), (0, 2), (0, 3)])


class TestRun(object):
    def test_constant(self):
        trace = run(path_graph(5), Constant())
        assert trace.outputs == ['x'] * 5
        assert trace.termination_round == [0] * 5
        assert trace.rounds_executed == 1
        assert node_averaged(trace) == 0

    def test_star(self):
        trace = run(star(), MaxOfNeighbours())
        assert trace.termination_round == [1, 0, 0, 0]
        assert trace.outputs == [4, 2, 3, 4]
        assert trace.messages_sent == 6
        assert node_averaged(trace) == Fraction(1, 4)
        assert worst_case(trace) == 1

    def test_rounds_follow_ids(self):
        trace = run(path_graph(3), WaitForId())
        assert trace.termination_round == [1, 2, 3]
        assert trace.rounds_executed == 4

    def test_alarm(self):
        program = SleepUntilId()
        trace = run(path_graph(3), program)
        assert trace.termination_round == [1, 2, 3]
        assert sorted(program.calls) == [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3)]

    def test_wake_on_message(self):
        program = Relay()
        trace = run(path_graph(3), program)
        assert trace.termination_round == [2, 3, 4]
        assert trace.outputs == [2, 3, 4]
        assert program.calls == [(0, 0), (0, 1), (0, 2), (2, 0), (3, 1), (4, 2)]

    def test_wake_in_the_past(self):
        with pytest.raises(SimulationError):
            run(path_graph(2), Backwards())

    def test_nobody_sends(self):
        with pytest.raises(SimulationError) as info:
            run(path_graph(2), Deaf())
        assert 'never come' in str(info.value)

    def test_non_neighbour(self):
        with pytest.raises(SimulationError):
            run(path_graph(4), Stray())

    def test_round_limit(self):
        with pytest.raises(SimulationError):
            run(path_graph(2), Forever(), max_rounds=5)

    def test_round_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv('LCL_MAX_ROUNDS', '3')
        with pytest.raises(SimulationError):
            run(path_graph(2), Forever())

    def test_deterministic(self):
        tree, _ = lower_bound_graph((3, 4))
        factory = lambda: GenericProgram(2, generic_params(2, [2], '2.5'))
        first, second = run(tree, factory()), run(tree, factory())
        assert first.outputs == second.outputs
        assert first.termination_round == second.termination_round


class TestMeasures(object):
    def test_schedule(self):
        trace = trace_from_schedule(['a'] * 4, [1, 2, 3, 4])
        assert node_averaged(trace) == Fraction(5, 2)
        assert node_averaged(trace) == Fraction(trace.total, trace.n)
        assert worst_case(trace) == 4

    def test_empty(self):
        trace = RunTrace([], [])
        assert node_averaged(trace) == 0
        assert worst_case(trace) == 0

    def test_record(self):
        trace = trace_from_schedule([1], [0])
        trace.record('fine', 2, 1)
        trace.record('broken', 1, 2)
        assert [d.name for d in trace.diagnostics] == ['fine', 'broken']
        assert [d.name for d in trace.violations] == ['broken']

    def test_csv(self, tmp_path):
        tree = path_graph(2)
        path = str(tmp_path / 'trace.csv')
        trace_from_schedule(['W', 'B'], [3, 1]).to_csv(path, tree, levels=[1, 1])
        with open(path) as f:
            assert f.read() == 'node_id,level,input,termination_round\n1,1,,3\n2,1,,1\n'


class TestLocalityAudit(object):
    def test_local_program(self):
        assert locality_audit(star(), MaxOfNeighbours) == []

    def test_global_program(self):
        assert locality_audit(path_graph(3), GlobalMax) == [0, 1, 2]

    @pytest.mark.parametrize('variant', ['2.5', '3.5'])
    def test_generic(self, variant):
        tree, _ = lower_bound_graph((3, 4))
        factory = lambda: GenericProgram(2, generic_params(2, [2], variant, tree.n))
        assert locality_audit(tree, factory) == []
