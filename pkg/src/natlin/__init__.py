"""Natural-number solutions of linear Diophantine equations ``sum(a_i * x_i) = b``."""
from .classify import classify, has_sign_variation
from .core import (
    Classification,
    ConstraintSystem,
    FiniteSolutionSet,
    InfiniteFamily,
    Infeasible,
    IntegerSolutionLattice,
    InvalidArgument,
    LinearEquation,
    NatlinError,
    NormalizedEquation,
    ParametricNaturalSolution,
    ResourceLimitError,
    TwoVarSolution,
    normalize,
)
from .euclid import BezoutResult, gcd_ext, multi_gcd_bezout
from .lattice import evaluate_lattice, integer_general_solution, lattice_coordinates
from .natsolve import (
    derive_nonneg_constraints,
    enumerate_finite,
    infinite_family,
    iter_natural_solutions,
    max_count_check,
    parametric_natural_solution,
    solve_ax_minus_by,
    stream_natural_solutions,
)
from .parsing import ParseError, parse_equation, render_equation

__version__ = "0.1.0"
