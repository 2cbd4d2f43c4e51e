"""Process exit codes returned by the command-line entry point."""

from enum import IntEnum


class ExitCodes(IntEnum):
    OK = 0
    USAGE = 2
    IO = 3
    PARSE = 4
    CAPACITY = 5
    VALIDATION = 6
    ROUTING = 7
    CONFIG = 8
