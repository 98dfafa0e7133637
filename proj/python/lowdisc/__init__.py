"""Low-discrepancy point sets: generators, discrepancy evaluation, descent."""

from ._lowdisc import (
    BudgetExceeded,
    LowdiscError,
    evaluate,
    fibonacci_integration_lattice,
    fibonacci_set,
    kronecker_lattice,
    l2_grad,
    linf_star,
    optimize,
    quadrature_oracle,
    random_set,
    sobol_set,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "LowdiscError",
    "evaluate",
    "fibonacci_integration_lattice",
    "fibonacci_set",
    "kronecker_lattice",
    "l2_grad",
    "linf_star",
    "optimize",
    "quadrature_oracle",
    "random_set",
    "sobol_set",
]
