#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Enumerations whose items carry an integer value, a printable tag and a description."""

from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Union

EnumKeyType = Union[str, int]


class EnumItem(NamedTuple):
    """One item of an enumeration."""

    tag: str
    value: int
    description: str


class MetaEnum(type):
    """Collects `NAME = value` and `NAME = (value, tag, description)` class attributes as items.

    After class creation every such attribute holds the bare integer value.
    """

    def __new__(mcs, name: str, bases: tuple, attrs: Dict[str, Any]) -> 'MetaEnum':
        cls = super().__new__(mcs, name, bases, attrs)
        items: List[EnumItem] = []
        for attr, value in attrs.items():
            if attr.startswith('_') or isinstance(value, (classmethod, staticmethod, property)) or callable(value):
                continue
            if isinstance(value, tuple):
                if len(value) == 2:
                    item = EnumItem(attr, value[0], value[1])
                else:
                    item = EnumItem(value[1], value[0], value[2])
            elif isinstance(value, int) and not isinstance(value, bool):
                item = EnumItem(attr, value, '')
            else:
                continue
            items.append(item)
            setattr(cls, attr, item.value)
        cls._items_ = items  # type: ignore
        return cls

    def _find(cls, key: EnumKeyType) -> Optional[EnumItem]:
        for item in cls._items_:  # type: ignore
            if isinstance(key, str) and key.upper() == item.tag.upper():
                return item
            if isinstance(key, int) and not isinstance(key, bool) and key == item.value:
                return item
        return None

    def __getitem__(cls, key: EnumKeyType) -> EnumKeyType:
        if not isinstance(key, (str, int)):
            raise TypeError(f"'{cls.__name__}' has no item with type '{type(key)!r}'")
        item = cls._find(key)
        if item is None:
            raise KeyError(f"'{cls.__name__}' has no item '{key}'")
        return item.value if isinstance(key, str) else item.tag

    def __iter__(cls) -> Iterator[EnumItem]:
        return iter(cls._items_)  # type: ignore

    def __contains__(cls, key: object) -> bool:
        return isinstance(key, (str, int)) and cls._find(key) is not None

    def __len__(cls) -> int:
        return len(cls._items_)  # type: ignore


class Enum(metaclass=MetaEnum):
    """Base of the enumerations."""

    @classmethod
    def get(cls, key: EnumKeyType, default: EnumKeyType = None) -> Optional[EnumKeyType]:
        """Tag for a value or value for a tag (tags are case insensitive).

        :param key: value or tag
        :param default: result for an unknown key
        :return: tag or value
        """
        try:
            return cls[key]
        except KeyError:
            return default

    @classmethod
    def desc(cls, key: EnumKeyType, default: str = '') -> str:
        """Description of the item with given value or tag.

        :raises TypeError: key is neither string nor int
        """
        if not isinstance(key, (str, int)):
            raise TypeError(f"'{cls.__name__}' has no item with type '{type(key)!r}'")
        item = cls._find(key)  # type: ignore  # pylint: disable=no-member
        return default if item is None else item.description

    @classmethod
    def name(cls, key: int, default: str = None) -> str:
        """Tag of the item with given value.

        :raises KeyError: unknown value and no default
        """
        item = cls._find(key)  # type: ignore  # pylint: disable=no-member
        if item is not None:
            return item.tag
        if default is None:
            raise KeyError(f"Enumeration not supported: {key}")
        return default

    @classmethod
    def tags(cls) -> Sequence[int]:
        """Values of all items in declaration order."""
        return [item.value for item in cls._items_]  # type: ignore  # pylint: disable=no-member

    @classmethod
    def from_int(cls, value: int) -> int:
        """Check that `value` belongs to the enumeration.

        :raises ValueError: unknown value
        """
        if value not in cls.tags():
            raise ValueError(f"{value} is not a value of {cls.__name__}")
        return value
