#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Identifiers of the transition rules and of the transition labels."""

from ..utils.easy_enum import Enum


class RuleId(Enum):
    """Transition rules; the tag is the name printed in event logs."""

    # maximal parallelism
    R1 = (1, 'R1', 'Valued tell')
    R2 = (2, 'R2', 'Tell with a cut constraint')
    R3 = (3, 'R3', 'Valued ask')
    R4 = (4, 'R4', 'Ask with a cut constraint')
    R5 = (5, 'R5', 'Both parallel components step')
    R6 = (6, 'R6', 'One parallel component steps')
    R7 = (7, 'R7', 'Nondeterministic choice')
    R8 = (8, 'R8', 'Valued now, guard holds, then-branch steps')
    R9 = (9, 'R9', 'Valued now, guard holds, then-branch idles')
    R10 = (10, 'R10', 'Valued now, guard fails, else-branch steps')
    R11 = (11, 'R11', 'Valued now, guard fails, else-branch idles')
    R12 = (12, 'R12', 'Now with a cut constraint, guard holds, then-branch steps')
    R13 = (13, 'R13', 'Now with a cut constraint, guard holds, then-branch idles')
    R14 = (14, 'R14', 'Now with a cut constraint, guard fails, else-branch steps')
    R15 = (15, 'R15', 'Now with a cut constraint, guard fails, else-branch idles')
    R16 = (16, 'R16', 'Hiding')
    R17 = (17, 'R17', 'Procedure call')
    # interleaving
    Q1 = (101, 'Q1', 'Valued tell')
    Q2 = (102, 'Q2', 'Tell with a cut constraint')
    Q3 = (103, 'Q3', 'Valued ask')
    Q4 = (104, 'Q4', 'Ask with a cut constraint')
    Q5 = (105, 'Q5', 'Parallel step while the sibling lets time pass')
    Q6 = (106, 'Q6', 'Parallel step of one component, the sibling has no time step')
    Q7 = (107, 'Q7', 'Nondeterministic choice')
    Q8 = (108, 'Q8', 'Procedure call')
    Q9 = (109, 'Q9', 'Hiding')
    Q10 = (110, 'Q10', 'Valued askp, guard entailed')
    Q11 = (111, 'Q11', 'Valued askp, cut level fails')
    Q12 = (112, 'Q12', 'Valued askp, checked and counter decreased')
    Q13 = (113, 'Q13', 'Valued askp, counter decreased by time passing')
    Q14 = (114, 'Q14', 'Valued askp, time-out expired')
    Q15 = (115, 'Q15', 'Askp with a cut constraint, guard entailed')
    Q16 = (116, 'Q16', 'Askp with a cut constraint, cut fails')
    Q17 = (117, 'Q17', 'Askp with a cut constraint, checked and counter decreased')
    Q18 = (118, 'Q18', 'Askp with a cut constraint, counter decreased by time passing')
    Q19 = (119, 'Q19', 'Askp with a cut constraint, time-out expired')
    # time steps of inactive agents
    Q0P = (200, "Q0'", 'Success lets time pass')
    Q1P = (201, "Q1'", 'Valued tell lets time pass')
    Q2P = (202, "Q2'", 'Tell with a cut constraint lets time pass')
    Q3P = (203, "Q3'", 'Valued ask lets time pass')
    Q4P = (204, "Q4'", 'Ask with a cut constraint lets time pass')
    Q7P = (207, "Q7'", 'Choice lets time pass')
    Q8P = (208, "Q8'", 'Procedure call unfolds while time passes')
    Q14P = (214, "Q14'", 'Expired valued askp lets time pass')
    Q19P = (219, "Q19'", 'Expired askp with a cut constraint lets time pass')


class Label(Enum):
    """Transition labels of the interleaving semantics."""

    TAU = (0, 'tau', 'Only time passes')
    OMEGA = (1, 'omega', 'Computational step')


# rules of the parallel operator; they describe a whole transition, never a single agent
PARALLEL_RULES = (RuleId.R5, RuleId.R6, RuleId.Q5, RuleId.Q6)

# askp rules that only check the guard and decrease the counter
COUNTER_CHECKS = (RuleId.Q12, RuleId.Q17)


def now_rule(valued: bool, entailed: bool, branch_steps: bool) -> int:
    """Rule of a now agent: R8..R11 when valued, R12..R15 otherwise."""
    offset = (0 if entailed else 2) + (0 if branch_steps else 1)
    return (RuleId.R8 if valued else RuleId.R12) + offset
