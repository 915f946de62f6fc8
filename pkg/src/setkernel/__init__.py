"""Desk-scale symbolic set theory kernel.

Subpackages:

- :mod:`setkernel.domains` -- finite logical domains, pairings, quotients,
  and the explicit Cantor-Bernstein bijection;
- :mod:`setkernel.ordinals` -- Cantor-normal-form ordinal notations;
- :mod:`setkernel.wellorder` -- finite well-orders and the recursion engine;
- :mod:`setkernel.cardinals` -- finite and tower-symbol cardinal arithmetic;
- :mod:`setkernel.hf` -- hereditarily finite sets as bit-membership codes;
- :mod:`setkernel.collapse` -- well-founded graphs and their collapse into
  set codes;
- :mod:`setkernel.zfc` -- ZFC axiom checking on finite membership models;
- :mod:`setkernel.cli` -- the ``setkernel`` command-line frontend.
"""

from .errors import KernelError, ParseError, ResourceLimitError, ValidationError

__all__ = [
    "KernelError",
    "ParseError",
    "ResourceLimitError",
    "ValidationError",
]

__version__ = "0.1.0"
