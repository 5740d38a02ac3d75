#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module for parsing the configuration file of the tsccp application."""

import logging
from typing import Any, Dict

import commentjson as json
import jmespath

from ..exceptions import SoftTimeError

logger = logging.getLogger("TSCCP")

# command -> option -> accepted type
OPTIONS: Dict[str, Dict[str, type]] = {
    'run': {'semantics': str, 'max_steps': int, 'output_format': str},
    'explore': {'max_steps': int, 'state_budget': int, 'prime': bool},
    'check': {'maxlen': int, 'max_steps': int, 'state_budget': int, 'pool': list, 'output_format': str},
}


class ToolConfigError(SoftTimeError):
    """Invalid configuration file."""
    fmt = 'SoftTime: configuration -> {description}'


class ToolConfig:
    """Option defaults of the commands, usable as the click `default_map`."""

    def __init__(self, config_data: dict) -> None:
        """Initialize ToolConfig from json config data.

        :raises ToolConfigError: an option has a value of the wrong type
        """
        if not isinstance(config_data, dict):
            raise ToolConfigError("the file must hold an object")
        self.config_data = config_data
        self.default_map: Dict[str, Dict[str, Any]] = {}
        for command, options in OPTIONS.items():
            for option, kind in options.items():
                value = jmespath.search(f"{command}.{option}", config_data)
                if value is None:
                    continue
                # reject booleans for integer options
                if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
                    raise ToolConfigError(f"'{command}.{option}' must be of type {kind.__name__}")
                self.default_map.setdefault(command, {})[option] = value
        for command, options in config_data.items():
            if command not in OPTIONS or not isinstance(options, dict):
                logger.warning(f"Ignoring section '{command}'")
                continue
            for option in sorted(set(options) - set(OPTIONS[command])):
                logger.warning(f"Ignoring unknown option '{command}.{option}'")

    @classmethod
    def load(cls, path: str) -> 'ToolConfig':
        """Read a JSON file with comments.

        :raises ToolConfigError: the file is not valid JSON
        """
        with open(path) as config_file:
            try:
                data = json.load(config_file)
            except (ValueError, json.JSONLibraryException, json.ParserException) as exc:
                raise ToolConfigError(f"{path}: {exc}") from exc
        return cls(data)
