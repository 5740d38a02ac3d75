#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Data types shared by both engines: events, tick records, outcomes, choosers and schedulers."""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..constraint import SoftConstraint
from ..lang import Agent, Call, Parallel, Program
from ..lang.ast import Position
from ..utils.easy_enum import Enum
from .exceptions import ReplayError
from .rules import COUNTER_CHECKS, PARALLEL_RULES, Label, RuleId

Path = Tuple[int, ...]
# (path of the choice, index of the chosen branch)
Decision = Tuple[str, int]


def format_path(path: Path) -> str:
    """`0.1` style rendering of a position in the parallel tree, `-` for the root."""
    return '.'.join(str(step) for step in path) if path else '-'


def parse_path(text: str) -> Path:
    """Inverse of `format_path`."""
    return () if text == '-' else tuple(int(step) for step in text.split('.'))


class RunStatus(Enum):
    """How a run ended."""

    SUCCESS = (0, 'success', 'Success-shaped agent reached')
    SUSPENDED = (3, 'suspended', 'No transition applies')
    BUDGET = (4, 'budget', 'Step budget exhausted')


@dataclass(frozen=True)
class Event:
    """A rule fired on a sub-agent during one tick."""

    rule: int
    path: Path
    told: Optional[str] = None
    label: Optional[int] = None
    pos: Position = field(default=None, compare=False)

    @property
    def tag(self) -> str:
        """Printable rule name."""
        return RuleId.name(self.rule)

    def to_dict(self) -> dict:
        """Serializable form."""
        data = {'rule': self.tag, 'path': format_path(self.path)}
        if self.told is not None:
            data['told'] = self.told
        if self.label is not None:
            data['label'] = Label.name(self.label)
        if self.pos is not None:
            data['line'], data['column'] = self.pos
        return data


@dataclass(frozen=True)
class StepResult:
    """One maximal-parallelism step: successor agent, told constraint and the rules fired."""

    agent: Agent
    delta: SoftConstraint
    events: Tuple[Event, ...]
    decisions: Tuple[Decision, ...] = ()
    rule: Optional[int] = None

    @property
    def root_rule(self) -> int:
        """Rule at the root of the derivation."""
        return self.events[0].rule if self.rule is None else self.rule


@dataclass(frozen=True)
class LabeledTransition:
    """One interleaving transition; `rule` is the rule at the root of its derivation."""

    label: int
    agent: Agent
    delta: SoftConstraint
    rule: int
    events: Tuple[Event, ...]

    @property
    def signature(self) -> Tuple[Tuple[Path, int], ...]:
        """Canonical key of the derivation."""
        return tuple(sorted((event.path, event.rule) for event in self.events))

    @property
    def actor(self) -> Optional[Event]:
        """Event of the single computational step, None for a pure time step."""
        for event in self.events:
            if event.label == Label.OMEGA and event.rule not in (RuleId.Q9,) + PARALLEL_RULES:
                return event
        return None


@dataclass(frozen=True)
class TickRecord:
    """What happened in one time-unit."""

    tick: int
    before: SoftConstraint
    after: SoftConstraint
    delta: SoftConstraint
    events: Tuple[Event, ...]
    label: Optional[int] = None
    rule: Optional[int] = None
    decisions: Tuple[Decision, ...] = ()


@dataclass
class RunOutcome:
    """Result of a run: status, final configuration and the tick log."""

    status: int
    agent: Agent
    store: SoftConstraint
    clock: int
    ticks: List[TickRecord] = field(default_factory=list)
    nonstandard: bool = False

    @property
    def status_tag(self) -> str:
        """Printable status."""
        return RunStatus.name(self.status)

    @property
    def decisions(self) -> List[Decision]:
        """All decisions of the run in tick order."""
        return [decision for record in self.ticks for decision in record.decisions]


@dataclass(frozen=True)
class Configuration:
    """Agent, store and clock."""

    agent: Agent
    store: SoftConstraint
    clock: int = 0


def initial_configuration(program: Program, store: Optional[SoftConstraint] = None) -> Configuration:
    """Main agent on the store 1, or on `store` for a non-standard start."""
    return Configuration(program.main, store if store is not None else SoftConstraint.one(program.semiring), 0)


def top_level_agents(agent: Agent, path: Path = ()) -> List[Tuple[Path, Agent]]:
    """Leaves of the parallel tree with their paths, in document order."""
    if isinstance(agent, Parallel):
        return top_level_agents(agent.left, path + (0,)) + top_level_agents(agent.right, path + (1,))
    return [(path, agent)]


def column_names(agent: Agent) -> List[str]:
    """Column titles of a timeline: procedure names for calls, `A1`, `A2`, ... otherwise."""
    names = []
    for index, (_, leaf) in enumerate(top_level_agents(agent), start=1):
        names.append(leaf.name if isinstance(leaf, Call) else f"A{index}")
    return names


# ----- choosers (maximal parallelism) --------------------------------------------------------------------------------
class Chooser:
    """Picks the branch of a choice; every answer is recorded in `decisions`."""

    def __init__(self) -> None:
        """Initialize the decision log."""
        self.decisions: List[Decision] = []

    def _pick(self, path: str, enabled: Sequence[int]) -> int:
        raise NotImplementedError()

    def choose(self, path: str, enabled: Sequence[int]) -> int:
        """Index of the chosen branch.

        :param path: position of the choice agent
        :param enabled: indexes of the branches whose guard holds, in source order
        :return: one of `enabled`
        """
        choice = self._pick(path, enabled)
        self.decisions.append((path, choice))
        return choice


class FirstChooser(Chooser):
    """Always the first enabled branch."""

    def _pick(self, path: str, enabled: Sequence[int]) -> int:
        return enabled[0]


class RandomChooser(Chooser):
    """Uniform choice with a seeded generator."""

    def __init__(self, seed: int = 0) -> None:
        """Initialize the generator.

        :param seed: seed of the generator
        """
        super().__init__()
        self.rng = random.Random(seed)

    def _pick(self, path: str, enabled: Sequence[int]) -> int:
        return self.rng.choice(list(enabled))


class ReplayChooser(Chooser):
    """Repeats a recorded decision log."""

    def __init__(self, decisions: Sequence[Decision]) -> None:
        """Initialize the replay.

        :param decisions: log produced by an earlier run
        """
        super().__init__()
        self.pending = list(decisions)

    def _pick(self, path: str, enabled: Sequence[int]) -> int:
        if not self.pending:
            raise ReplayError(f"no decision left for the choice at {path}")
        recorded_path, choice = self.pending.pop(0)
        if recorded_path != path or choice not in enabled:
            raise ReplayError(f"recorded choice {choice} at {recorded_path} does not fit the choice at {path}")
        return choice


# ----- schedulers (interleaving) -------------------------------------------------------------------------------------
class Scheduler:
    """Picks one transition per tick; every answer is recorded in `decisions`."""

    def __init__(self) -> None:
        """Initialize the decision log."""
        self.decisions: List[Decision] = []

    def _pick(self, transitions: Sequence[LabeledTransition]) -> int:
        raise NotImplementedError()

    def choose(self, transitions: Sequence[LabeledTransition]) -> int:
        """Index of the chosen transition.

        :param transitions: canonically ordered, non-empty
        :return: index into `transitions`
        """
        choice = self._pick(transitions)
        self.decisions.append(('-', choice))
        return choice


def _priority_class(transition: LabeledTransition) -> int:
    actor = transition.actor
    if actor is None:
        return 2
    return 1 if actor.rule in COUNTER_CHECKS else 0


class PriorityScheduler(Scheduler):
    """Store-touching steps before counter checks before pure time steps.

    Ties go to the acting component in document order, or in reverse document order.
    """

    def __init__(self, reverse: bool = False) -> None:
        """Initialize the scheduler.

        :param reverse: prefer the last component instead of the first
        """
        super().__init__()
        self.reverse = reverse

    def _pick(self, transitions: Sequence[LabeledTransition]) -> int:
        def key(index: int) -> Tuple:
            transition = transitions[index]
            actor = transition.actor
            path: Path = actor.path if actor else ()
            order = tuple(-step for step in path) if self.reverse else path
            return _priority_class(transition), order, index

        return min(range(len(transitions)), key=key)


class RandomScheduler(Scheduler):
    """Uniform choice among all transitions with a seeded generator."""

    def __init__(self, seed: int = 0) -> None:
        """Initialize the generator.

        :param seed: seed of the generator
        """
        super().__init__()
        self.rng = random.Random(seed)

    def _pick(self, transitions: Sequence[LabeledTransition]) -> int:
        return self.rng.randrange(len(transitions))


class ReplayScheduler(Scheduler):
    """Repeats a recorded decision log."""

    def __init__(self, decisions: Sequence[Decision]) -> None:
        """Initialize the replay.

        :param decisions: log produced by an earlier run
        """
        super().__init__()
        self.pending = list(decisions)

    def _pick(self, transitions: Sequence[LabeledTransition]) -> int:
        if not self.pending:
            raise ReplayError("no decision left")
        _, choice = self.pending.pop(0)
        if not 0 <= choice < len(transitions):
            raise ReplayError(f"recorded transition {choice} out of {len(transitions)}")
        return choice


@dataclass
class Terminal:
    """A final configuration found by exhaustive exploration, with the decisions leading to it."""

    status: int
    store: SoftConstraint
    agent: Agent
    witness: Tuple[Decision, ...]


@dataclass
class Exploration:
    """Terminals of an exhaustive exploration.

    `exhausted` is set when the state budget ran out, `truncated` when some computation reached the depth bound.
    """

    terminals: Dict[Tuple[int, SoftConstraint], Terminal] = field(default_factory=dict)
    exhausted: bool = False
    truncated: bool = False
    states: int = 0

    @property
    def complete(self) -> bool:
        """True when neither bound cut the search."""
        return not (self.exhausted or self.truncated)

    def add(self, terminal: Terminal) -> None:
        """Keep the first witness of every distinct (status, store)."""
        self.terminals.setdefault((terminal.status, terminal.store), terminal)

    def stores(self, status: int = RunStatus.SUCCESS) -> List[SoftConstraint]:
        """Final stores of the terminals with given status."""
        return [terminal.store for (kind, _), terminal in self.terminals.items() if kind == status]


@dataclass(frozen=True)
class Observables:
    """Projected final stores of the successful computations, with the bounds that cut the search."""

    stores: frozenset
    exhausted: bool = False
    truncated: bool = False

    @property
    def complete(self) -> bool:
        """True when neither bound cut the search."""
        return not (self.exhausted or self.truncated)
