"""Exception hierarchy shared by every unicore module."""

from __future__ import annotations


class UnicoreError(Exception):
    """Base class for all library errors."""


class InvalidInput(UnicoreError, ValueError):
    pass


class UnknownVertex(UnicoreError, KeyError):
    pass


class UnknownEdge(UnicoreError, KeyError):
    pass


class NotUnicyclic(UnicoreError, ValueError):
    pass


class UnsupportedClass(UnicoreError, ValueError):
    """The graph has a component with two or more independent cycles."""


class TooLarge(UnicoreError, ValueError):
    pass


class InvalidSpec(UnicoreError, ValueError):
    pass


class UnknownFixture(UnicoreError, KeyError):
    pass
