"""BPMN 2.0 process-model linter.

Parses BPMN XML into an object graph and evaluates a catalog of 121
well-formedness rules, returning deterministic diagnostics.
"""

from ._bpmnlint import Model, explain, lint, list_rules, parse

__all__ = ["Model", "explain", "lint", "list_rules", "parse"]


def check(path, **kwargs):
    """Parse and lint a file in one step; see :func:`lint` for options."""
    return lint(parse(path), **kwargs)
