"""Letter graphs, grid classes, chain circuits and locally ordered hypergraphs.

Small exact solvers for graph lettericity, monotone and geometric
griddability of permutations, the chain co-chromatic parameters, and
global (in)consistency of ordered hypergraphs.  Everything works at desk
scale: graphs up to roughly 10 vertices, permutations up to length 8.
"""

from .errors import BudgetExhausted, InputError

__all__ = ["BudgetExhausted", "InputError"]
__version__ = "0.1.0"
