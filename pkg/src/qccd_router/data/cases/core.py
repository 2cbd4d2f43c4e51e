"""Base class shared by every DDT case."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Case:
    """A titled test case; the title is what ``{case}`` renders to in allure titles."""

    title: str

    def __str__(self) -> str:
        return self.title
