#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Parser of program files: grammar, name resolution and dialect checks."""

import logging
import os
from functools import reduce
from typing import Any, Dict, List, Optional, Tuple

import lark
from lark import Token, v_args

from ..constraint import ConstraintError, SoftConstraint, Variable
from ..semiring import SemiringError, get_semiring
from ..utils.misc import load_file
from .analysis import free_vars, iter_agents
from .ast import (DIALECTS, TSCCP, TSCCP_I, Agent, Ask, Askp, Call, ConstraintDecl, ConstraintRef,
                  ConstraintThreshold, Delay, Exists, GradeThreshold, Now, Parallel, ProcDecl, Program, Success, Sum,
                  Tell, Threshold, Timeout, Watchdog, WATCH_SUFFIX, one_ref, zero_threshold)
from .exceptions import DialectError, LangError, NameResolutionError, ParseError
from .grammar import GRAMMAR, KEYWORDS

logger = logging.getLogger("LANG:PARSER")

_PARSER = lark.Lark(GRAMMAR, parser='earley', propagate_positions=True, maybe_placeholders=True)

DEFAULT_SEMIRING = 'weighted'

_DIALECT_ONLY = {
    Now: TSCCP,
    Watchdog: TSCCP,
    Timeout: TSCCP,
    Askp: TSCCP_I,
}


def _position(item: Any) -> Optional[Tuple[int, int]]:
    if isinstance(item, tuple):
        return item
    line = getattr(item, 'line', None)
    column = getattr(item, 'column', None)
    if line is None or column is None:
        return None
    return line, column


def _is_ask(agent: Agent) -> bool:
    return isinstance(agent, Ask) or (isinstance(agent, Delay) and isinstance(agent.action, Ask))


@v_args(meta=True)
class ProgramBuilder(lark.Transformer):
    """Turns the parse tree into a resolved Program.

    Declarations are transformed before the agents that use them, so names are resolved on the fly.
    """

    def __init__(self, source: Optional[str] = None) -> None:
        """Initialize the builder.

        :param source: name of the program file used in error messages
        """
        super().__init__()
        self.source = source
        self.semiring = get_semiring(DEFAULT_SEMIRING)
        self.semiring_declared = False
        self.dialect = TSCCP
        self.variables: Dict[str, Variable] = {}
        self.constraints: Dict[str, ConstraintDecl] = {}

    def _error(self, cls: type, message: str, where: Any = None) -> LangError:
        pos = _position(where)
        line, column = pos if pos else (None, None)
        return cls(message, line=line, column=column, source=self.source)

    # ----- header ----------------------------------------------------------------------------------------------------
    def semiring_decl(self, meta: Any, children: List[Token]) -> None:
        name = children[0]
        if self.constraints:
            raise self._error(ParseError, "semiring must be declared before the constraints", name)
        try:
            self.semiring = get_semiring(str(name))
        except SemiringError as exc:
            raise self._error(NameResolutionError, exc.description, name) from exc
        self.semiring_declared = True

    def dialect_decl(self, meta: Any, children: List[Token]) -> None:
        self.dialect = str(children[0])

    def var_decl(self, meta: Any, children: List[Any]) -> None:
        names, symbols = children
        domain = tuple(str(symbol) for symbol in symbols)
        if len(set(domain)) != len(domain):
            raise self._error(ParseError, f"repeated values in domain {{{', '.join(domain)}}}", meta)
        for name in names:
            self._check_new_name(name)
            if name in self.variables:
                raise self._error(NameResolutionError, f"variable '{name}' declared twice", name)
            self.variables[str(name)] = Variable(str(name), domain, (0, len(self.variables)))

    def constraint_decl(self, meta: Any, children: List[Any]) -> None:
        name, params, *rows = children
        self._check_new_name(name)
        if str(name) in self.constraints:
            raise self._error(NameResolutionError, f"constraint '{name}' declared twice", name)
        support = tuple(self._variable(param) for param in (params or []))
        if len({var.name for var in support}) != len(support):
            raise self._error(ParseError, f"constraint '{name}' repeats a parameter", name)
        table: Dict[Tuple[str, ...], Any] = {}
        default = None
        for kind, key, grade_token in rows:
            grade = self._grade(grade_token)
            if kind == 'default':
                default = grade
                continue
            if len(key) != len(support):
                raise self._error(ParseError, f"row {key} of '{name}' needs {len(support)} values", grade_token)
            if key in table:
                raise self._error(ParseError, f"row {key} of '{name}' listed twice", grade_token)
            table[key] = grade
        try:
            constraint = SoftConstraint.from_rows(self.semiring, support, table, default)
        except ConstraintError as exc:
            raise self._error(ParseError, f"constraint '{name}': {exc.description}", name) from exc
        self.constraints[str(name)] = ConstraintDecl(str(name), support, constraint)

    def table_row(self, meta: Any, children: List[Any]) -> Tuple[str, Tuple[str, ...], Token]:
        key, grade = children
        return 'row', key, grade

    def default_row(self, meta: Any, children: List[Any]) -> Tuple[str, Tuple[str, ...], Token]:
        return 'default', (), children[0]

    def key(self, meta: Any, children: List[Any]) -> Tuple[str, ...]:
        if len(children) == 1 and isinstance(children[0], list):
            return tuple(children[0])
        return (str(children[0]),)

    def name_list(self, meta: Any, children: List[Token]) -> List[Token]:
        return list(children)

    def symbol_list(self, meta: Any, children: List[Token]) -> List[str]:
        return [str(child) for child in children]

    # ----- declarations ----------------------------------------------------------------------------------------------
    def proc_decl(self, meta: Any, children: List[Any]) -> ProcDecl:
        name, params, body = children
        self._check_new_name(name)
        formals = tuple(self._variable(param) for param in (params or []))
        if len({var.name for var in formals}) != len(formals):
            raise self._error(ParseError, f"procedure '{name}' repeats a formal parameter", name)
        return ProcDecl(str(name), formals, body)

    def main_decl(self, meta: Any, children: List[Agent]) -> Agent:
        return children[0]

    def start(self, meta: Any, children: List[Any]) -> Program:
        procedures = tuple(child for child in children if isinstance(child, ProcDecl))
        return Program(
            semiring=self.semiring,
            dialect=self.dialect,
            variables=tuple(self.variables.values()),
            constraints=tuple(self.constraints.values()),
            procedures=procedures,
            main=children[-1],
            source=self.source,
        )

    # ----- agents ----------------------------------------------------------------------------------------------------
    def success(self, meta: Any, children: List[Any]) -> Agent:
        return Success(pos=_position(meta))

    def tell(self, meta: Any, children: List[Any]) -> Agent:
        name, (ticks, threshold), cont = children
        agent = Tell(self._ref(name), threshold, cont, pos=_position(name))
        return agent if ticks is None else Delay(ticks, agent, pos=_position(name))

    def ask(self, meta: Any, children: List[Any]) -> Agent:
        name, (ticks, threshold), cont = children
        agent = Ask(self._ref(name), threshold, cont, pos=_position(name))
        return agent if ticks is None else Delay(ticks, agent, pos=_position(name))

    def plain_arrow(self, meta: Any, children: List[Any]) -> Tuple[Optional[int], Threshold]:
        return None, self._threshold(children[0])

    def delayed_arrow(self, meta: Any, children: List[Any]) -> Tuple[Optional[int], Threshold]:
        ticks, threshold = children
        return int(ticks), self._threshold(threshold)

    def grade_threshold(self, meta: Any, children: List[Token]) -> Threshold:
        return GradeThreshold(self._grade(children[0]))

    def constraint_threshold(self, meta: Any, children: List[Token]) -> Threshold:
        return ConstraintThreshold(self._ref(children[0]))

    def choice(self, meta: Any, children: List[Agent]) -> Agent:
        for branch in children:
            if not _is_ask(branch):
                raise self._error(ParseError, "every branch of a choice must start with ask", branch.pos or meta)
        return Sum(tuple(children), pos=_position(meta))

    def parallel(self, meta: Any, children: List[Agent]) -> Agent:
        return reduce(lambda left, right: Parallel(left, right, pos=left.pos), children)

    def exists(self, meta: Any, children: List[Any]) -> Agent:
        name, body = children
        return Exists(self._variable(name), body, pos=_position(name))

    def call(self, meta: Any, children: List[Any]) -> Agent:
        name, params = children
        return Call(str(name), tuple(self._variable(param) for param in (params or [])), pos=_position(name))

    def now(self, meta: Any, children: List[Any]) -> Agent:
        threshold, name, then, orelse = children
        return Now(self._ref(name), self._threshold(threshold), then, orelse, pos=_position(name))

    def askp(self, meta: Any, children: List[Any]) -> Agent:
        ticks, name, threshold, then, orelse = children
        return Askp(int(ticks), self._ref(name), self._threshold(threshold), then, orelse, pos=_position(name))

    def watchdog(self, meta: Any, children: List[Any]) -> Agent:
        body, threshold, name, orelse = children
        return Watchdog(body, self._threshold(threshold), self._ref(name), orelse, pos=_position(name))

    def timeout(self, meta: Any, children: List[Any]) -> Agent:
        guarded, ticks, orelse = children
        if isinstance(guarded, Sum):
            branches = guarded.branches
        elif _is_ask(guarded):
            branches = (guarded,)
        else:
            raise self._error(ParseError, "timeout needs a choice of ask-guarded branches", ticks)
        return Timeout(branches, int(ticks), orelse, pos=_position(ticks))

    # ----- helpers ---------------------------------------------------------------------------------------------------
    def _check_new_name(self, name: Token) -> None:
        if str(name) in KEYWORDS:
            raise self._error(NameResolutionError, f"'{name}' is a reserved word", name)

    def _variable(self, name: Token) -> Variable:
        try:
            return self.variables[str(name)]
        except KeyError:
            raise self._error(NameResolutionError, f"unknown variable '{name}'", name) from None

    def _ref(self, name: Token) -> ConstraintRef:
        if str(name) == 'one':
            return one_ref(self.semiring)
        if str(name) == 'zero':
            return zero_threshold(self.semiring).ref
        try:
            return self.constraints[str(name)].ref
        except KeyError:
            raise self._error(NameResolutionError, f"unknown constraint '{name}'", name) from None

    def _grade(self, token: Token) -> Any:
        try:
            return self.semiring.parse_literal(str(token))
        except SemiringError as exc:
            raise self._error(ParseError, exc.description, token) from exc

    def _threshold(self, threshold: Optional[Threshold]) -> Threshold:
        return zero_threshold(self.semiring) if threshold is None else threshold


def _error_at(cls: type, message: str, node: Agent, source: Optional[str]) -> LangError:
    pos = getattr(node, 'pos', None)
    line, column = pos if pos else (None, None)
    return cls(message, line=line, column=column, source=source)


def check_program(program: Program) -> None:
    """Resolve calls, check procedure closure and dialect legality.

    :param program: freshly built program
    :raises NameResolutionError: undeclared procedure, duplicate declaration, arity or domain mismatch
    :raises ParseError: a procedure body has free variables outside its formals
    :raises DialectError: construct of the other dialect
    """
    source = program.source
    if program.dialect not in DIALECTS:
        raise ParseError(f"unknown dialect '{program.dialect}'", source=source)
    declared: Dict[str, ProcDecl] = {}
    for proc in program.procedures:
        if proc.name in declared:
            raise NameResolutionError(f"procedure '{proc.name}' declared twice", source=source)
        declared[proc.name] = proc
    agents = [program.main] + [proc.body for proc in program.procedures]
    for root in agents:
        for node in iter_agents(root):
            required = _DIALECT_ONLY.get(type(node))
            if required is not None and required != program.dialect:
                raise _error_at(DialectError, f"'{type(node).__name__.lower()}' is not allowed in a "
                                              f"{program.dialect} program", node, source)
            if isinstance(node, Call):
                proc = declared.get(node.name)
                if proc is None:
                    raise _error_at(NameResolutionError, f"unknown procedure '{node.name}'", node, source)
                if len(proc.formals) != len(node.actuals):
                    raise _error_at(NameResolutionError, f"'{node.name}' expects {len(proc.formals)} arguments",
                                    node, source)
                for formal, actual in zip(proc.formals, node.actuals):
                    if formal.domain != actual.domain:
                        raise _error_at(NameResolutionError, f"'{actual.name}' and formal '{formal.name}' of "
                                                             f"'{node.name}' have different domains", node, source)
    for proc in program.procedures:
        if WATCH_SUFFIX in proc.name:
            continue
        extra = sorted(var.name for var in free_vars(proc.body) if var not in proc.formals)
        if extra:
            raise NameResolutionError(f"procedure '{proc.name}' uses {', '.join(extra)} outside its formals",
                                      source=source)


def parse(text: str, source: Optional[str] = None) -> Program:
    """Parse program text.

    :param text: program source
    :param source: file name used in error messages
    :return: resolved and checked program
    :raises ParseError: syntax error with line and column
    :raises NameResolutionError: unknown name
    :raises DialectError: construct outside the program dialect
    """
    try:
        tree = _PARSER.parse(text)
    except lark.exceptions.UnexpectedEOF as exc:
        raise ParseError("unexpected end of input", source=source) from exc
    except lark.exceptions.UnexpectedInput as exc:
        raise ParseError(f"unexpected input {exc.get_context(text).strip()!r}", line=exc.line, column=exc.column,
                         source=source) from exc
    try:
        program = ProgramBuilder(source).transform(tree)
    except lark.exceptions.VisitError as exc:
        if isinstance(exc.orig_exc, LangError):
            raise exc.orig_exc from None
        raise
    check_program(program)
    logger.debug(f"Parsed {source or 'program'}: {program.dialect}, {len(program.procedures)} procedures")
    return program


def load_program(*path_segments: str) -> Program:
    """Read and parse a program file.

    :param path_segments: pieces of the path to the file
    :return: program
    """
    path = os.path.join(*path_segments)
    text = load_file(path)
    assert isinstance(text, str)
    return parse(text, source=os.path.basename(path))
