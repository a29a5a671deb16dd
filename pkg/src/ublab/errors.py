"""Exception types raised by the package.

Two broad families matter to the command line front end: input problems
(bad tokens, malformed sequences, invalid family parameters, infeasible
programs) exit with status 2, while domain failures on well-formed input
(disconnected graphs, non-trees, missing splits) exit with status 1.
"""


class UblabError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(UblabError, ValueError):
    """Malformed input: bad edge tokens, self-loops, duplicate edges."""


class MalformedSequenceError(GraphInputError):
    """A level sequence violates the depth rules or fails to parse."""


class InvalidOrderError(GraphInputError):
    """A vertex count outside the valid range for the requested object."""


class InvalidSpecError(GraphInputError):
    """Invalid family parameters (e.g. spider legs not nonincreasing)."""


class InfeasibleError(GraphInputError):
    """A relaxation instance or candidate tuple violates its constraints."""


class DisconnectedGraphError(UblabError, ValueError):
    """Distances were requested for a graph that is not connected."""


class NotATreeError(UblabError, ValueError):
    """A tree-only operation was applied to a graph that is not a tree."""


class NoSplitError(UblabError, ValueError):
    """No valid branch-vertex split exists (fewer than two branch vertices)."""
