# -*- coding: utf-8; -*-

"""Synchronous LOCAL round engine.

Every round each running node receives what its neighbours sent in the
previous round, updates its state, sends per-neighbour messages and may emit
its final output. A node's termination round is the round of that output;
afterwards the node is frozen and messages addressed to it are dropped.

A program that would do nothing in a round without mail may say so through
`Step.wake`; the engine then skips the node until its alarm rings or a
message reaches it, which leaves every termination round unchanged.
"""

import csv
import json
import logging
import os
import random
from collections import namedtuple
from fractions import Fraction

from lclbench.exc import SimulationError

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

DEFAULT_MAX_ROUNDS = 10 ** 6

NodeView = namedtuple('NodeView', 'index id input degree ports n id_bound')
# a Step may name the round the node wants to run next; None means the next
# round and ON_MESSAGE means only when mail arrives
ON_MESSAGE = float('inf')

Step = namedtuple('Step', 'state messages output wake')
Step.__new__.__defaults__ = ({}, None, None)

Diagnostic = namedtuple('Diagnostic', 'name bound observed')


class NodeProgram(object):
    """A deterministic per-node algorithm.

    ``init(view)`` returns the initial state; ``step(rnd, state, inbox)``
    returns a :class:`Step`. ``inbox`` maps neighbour index to message and
    is empty on rounds the node is stepped for its alarm only.
    """

    name = None

    def init(self, view):
        raise NotImplementedError

    def step(self, rnd, state, inbox):
        raise NotImplementedError

    def finish(self, trace, states):
        """Hook to add diagnostics once every node terminated."""


class RunTrace(object):
    def __init__(self, termination_round, outputs, rounds_executed=None,
                 messages_sent=0, message_bytes=0, dropped=0, program=None):
        self.termination_round = list(termination_round)
        self.outputs = list(outputs)
        if rounds_executed is None:
            rounds_executed = max(self.termination_round) + 1 if self.termination_round else 0
        self.rounds_executed = rounds_executed
        self.messages_sent = messages_sent
        self.message_bytes = message_bytes
        self.dropped = dropped
        self.program = program
        self.levels = None
        self.diagnostics = []
        self.violations = []

    def __repr__(self):
        return '<RunTrace %s n=%d avg=%s worst=%d>' % (
            self.program, self.n, float(node_averaged(self)), worst_case(self))

    @property
    def n(self):
        return len(self.termination_round)

    @property
    def total(self):
        return sum(self.termination_round)

    def record(self, name, bound, observed):
        entry = Diagnostic(name, bound, observed)
        self.diagnostics.append(entry)
        if observed > bound:
            self.violations.append(entry)
            log.warning('%s: %s observed %s > bound %s', self.program, name, observed, bound)
        return entry

    def summary(self):
        return {
            'n': self.n,
            'avg': float(node_averaged(self)),
            'worst': worst_case(self),
            'total': self.total,
        }

    def to_csv(self, path, tree, levels=None, inputs=None):
        with open(path, 'wt') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(['node_id', 'level', 'input', 'termination_round'])
            for v, r in enumerate(self.termination_round):
                writer.writerow([tree.ids[v],
                                 levels[v] if levels is not None else '',
                                 inputs[v] if inputs is not None else '',
                                 r])

    def summary_to_json(self, path):
        with open(path, 'wt') as f:
            json.dump(self.summary(), f, sort_keys=True)
            f.write('\n')


def node_averaged(trace):
    """Exact mean termination round."""
    if not trace.n:
        return Fraction(0)
    return Fraction(trace.total, trace.n)


def worst_case(trace):
    return max(trace.termination_round) if trace.n else 0


def trace_from_schedule(outputs, rounds, program=None):
    """Wrap centrally computed outputs and their charged rounds."""
    return RunTrace(rounds, outputs, program=program)


def max_rounds_from_env():
    value = os.environ.get('LCL_MAX_ROUNDS')
    return int(value) if value else DEFAULT_MAX_ROUNDS


def run(tree, program, inputs=None, max_rounds=None, id_bound=None):
    """Execute ``program`` on every node of ``tree`` until all terminate.

    Only nodes with mail or an alarm for the current round are stepped;
    rounds in which neither happens are skipped.
    """
    if max_rounds is None:
        max_rounds = max_rounds_from_env()
    if inputs is None:
        inputs = tree.inputs or [None] * tree.n
    if id_bound is None:
        id_bound = max(tree.ids) if tree.n else 1

    n = tree.n
    neighbours = [frozenset(tree.neighbours(v)) for v in tree.nodes()]
    states = [program.init(NodeView(v, tree.ids[v], inputs[v], tree.degree(v),
                                    tree.neighbours(v), n, id_bound))
              for v in tree.nodes()]
    terminated = [None] * n
    outputs = [None] * n
    wake = [0] * n
    alarms = {0: set(tree.nodes())}
    inbox = {}
    live = n
    sent = size = dropped = steps = 0

    rnd = 0
    while live:
        if rnd > max_rounds:
            raise SimulationError('%s: %d node(s) still running after %d rounds'
                                  % (program.name, live, max_rounds))
        due = set(v for v in alarms.pop(rnd, ()) if wake[v] == rnd)
        due.update(inbox)
        outbox = {}
        for v in sorted(due):
            if terminated[v] is not None:
                continue
            steps += 1
            step = program.step(rnd, states[v], inbox.get(v, {}))
            states[v] = step.state
            for u, message in step.messages.items():
                if u not in neighbours[v]:
                    raise SimulationError('%s: node %d sent to non-neighbour %r'
                                          % (program.name, v, u))
                sent += 1
                size += len(repr(message))
                if terminated[u] is not None:
                    dropped += 1
                else:
                    outbox.setdefault(u, {})[v] = message
            if step.output is not None:
                terminated[v] = rnd
                outputs[v] = step.output
                live -= 1
                continue
            alarm = rnd + 1 if step.wake is None else step.wake
            if alarm <= rnd:
                raise SimulationError('%s: node %d asked to wake at round %r in round %d'
                                      % (program.name, v, alarm, rnd))
            wake[v] = alarm
            if alarm != ON_MESSAGE:
                alarms.setdefault(alarm, set()).add(v)
        inbox = outbox
        if not live:
            break
        if inbox:
            rnd += 1
        elif alarms:
            rnd = min(alarms)
        else:
            raise SimulationError('%s: %d node(s) wait for messages that never come'
                                  % (program.name, live))

    trace = RunTrace(terminated, outputs, messages_sent=sent, message_bytes=size,
                     dropped=dropped, program=program.name)
    program.finish(trace, states)
    log.debug('%s: n=%d rounds=%d steps=%d messages=%d', program.name, n,
              trace.rounds_executed, steps, sent)
    return trace


def locality_audit(tree, program_factory, inputs=None, seed=0, max_rounds=None):
    """Nodes whose output changes when ids beyond their termination radius change.

    Each node is rerun with every id outside its ``termination_round``-ball
    replaced by a fresh id; an empty result means the program is local.
    """
    top = max(tree.ids) if tree.n else 0
    id_bound = 2 * top + tree.n
    baseline = run(tree, program_factory(), inputs, max_rounds, id_bound)
    rng = random.Random(seed)
    changed = []
    for v in tree.nodes():
        ball = tree.ball(v, baseline.termination_round[v])
        fresh = iter(rng.sample(range(top + 1, id_bound + 1), tree.n))
        ids = [tree.ids[u] if u in ball else next(fresh) for u in tree.nodes()]
        rerun = run(tree.with_ids(ids), program_factory(), inputs, max_rounds, id_bound)
        if rerun.outputs[v] != baseline.outputs[v]:
            changed.append(v)
    return changed
