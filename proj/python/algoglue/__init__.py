"""Programs, algorithms and glueings over models of computation."""

from ._algoglue import (
    Error,
    Tape,
    abstract_run,
    algorithm_json,
    census,
    check_implements,
    cli,
    eval_recfun,
    glue,
    isomorphic,
    program_json,
    run,
    size,
    tm_apply,
    tm_instructions,
)

__all__ = [
    "Error",
    "Tape",
    "abstract_run",
    "algorithm_json",
    "census",
    "check_implements",
    "cli",
    "eval_recfun",
    "glue",
    "isomorphic",
    "program_json",
    "run",
    "size",
    "tm_apply",
    "tm_instructions",
]
