#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Concrete grammar of program files."""

KEYWORDS = frozenset((
    'semiring', 'dialect', 'var', 'in', 'constraint', 'default', 'proc', 'main',
    'success', 'tell', 'ask', 'now', 'then', 'else', 'askp', 'exists', 'do', 'watching', 'timeout',
    'one', 'zero',
))

# built-in constraint names stay ordinary names
RESERVED = sorted(KEYWORDS - {'one', 'zero'})

GRAMMAR = r"""
start: header* proc_decl* main_decl

?header: semiring_decl
       | dialect_decl
       | var_decl
       | constraint_decl

semiring_decl: "semiring" NAME
dialect_decl: "dialect" DIALECT
var_decl: "var" name_list "in" "{" symbol_list "}"
constraint_decl: "constraint" NAME "(" [name_list] ")" "{" row* "}"
?row: key "->" GRADE                  -> table_row
    | "default" "->" GRADE            -> default_row
key: symbol
   | "(" symbol_list ")"

proc_decl: "proc" PROC_NAME "(" [name_list] ")" "::" agent
main_decl: "main" ":" agent

name_list: NAME ("," NAME)*
symbol_list: symbol ("," symbol)*
?symbol: NAME
       | INT

?agent: parallel
?parallel: choice ("||" choice)*
?choice: prefix ("+" prefix)*

?prefix: "success"                                                   -> success
       | "tell" "(" NAME ")" arrow prefix                            -> tell
       | "ask" "(" NAME ")" arrow prefix                             -> ask
       | "now" [threshold] NAME "then" prefix "else" prefix          -> now
       | "askp" INT "(" NAME ")" "?" [threshold] prefix ":" prefix   -> askp
       | "exists" NAME "." prefix                                    -> exists
       | PROC_NAME "(" [name_list] ")"                               -> call
       | "do" prefix "watching" [threshold] NAME ["else" prefix]     -> watchdog
       | "(" agent ")" "timeout" "(" INT ")" prefix                  -> timeout
       | "(" agent ")"

arrow: "->" [threshold]                -> plain_arrow
     | "-" INT "->" [threshold]        -> delayed_arrow

threshold: "[" GRADE "]"               -> grade_threshold
         | "{" NAME "}"                -> constraint_threshold

DIALECT: "tsccp-i" | "tsccp"
GRADE: /\d+(\.\d+)?(\/\d+)?/ | "inf" | "true" | "false"
PROC_NAME: /(?!(?:@RESERVED@)\b)[A-Za-z_][A-Za-z0-9_]*(@watch[0-9]+)?/
COMMENT: /#[^\n]*/
NAME: /(?!(?:@RESERVED@)\b)[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.WS
%ignore WS
%ignore COMMENT
""".strip().replace('@RESERVED@', '|'.join(RESERVED))
