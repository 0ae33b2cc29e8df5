"""Exception hierarchy.

Every domain error carries a stable ``code`` string so the command line
front end can report it without parsing messages.
"""


class EulerWedgeError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidRank(EulerWedgeError, ValueError):
    code = "invalid_rank"


class IndexOutOfRange(EulerWedgeError, IndexError):
    code = "index_out_of_range"


class NotEuler(EulerWedgeError, ValueError):
    code = "not_euler"


class OrbitTooLarge(EulerWedgeError, RuntimeError):
    code = "orbit_too_large"


class JacobiViolation(EulerWedgeError, ValueError):
    code = "jacobi_violation"

    def __init__(self, triple, residual):
        self.triple = tuple(triple)
        self.residual = float(residual)
        super().__init__(
            f"Jacobi identity fails on basis triple {self.triple} "
            f"(residual {self.residual:.3e})"
        )


class NumericalFailure(EulerWedgeError, ArithmeticError):
    code = "numerical_failure"


class AutomorphismViolation(EulerWedgeError, ValueError):
    code = "automorphism_violation"


class CriteriaDisagree(EulerWedgeError, RuntimeError):
    code = "criteria_disagree"


class SolverFailure(EulerWedgeError, RuntimeError):
    code = "solver_failure"


class NotInvariant(EulerWedgeError, ValueError):
    code = "not_invariant"


class NotSkewHermitian(EulerWedgeError, ValueError):
    code = "not_skew_hermitian"


class InvariantViolation(EulerWedgeError, ValueError):
    code = "invariant_violation"


class NoGeometricRealization(EulerWedgeError, ValueError):
    code = "no_geometric_realization"


class NotOnManifold(EulerWedgeError, ValueError):
    code = "not_on_manifold"


class NotProper(EulerWedgeError, ValueError):
    code = "not_proper"


class EmptyRegionSample(EulerWedgeError, ValueError):
    code = "empty_region_sample"


class NotModularPair(EulerWedgeError, ValueError):
    code = "not_modular_pair"


class NotStandard(EulerWedgeError, ValueError):
    code = "not_standard"


class DimensionMismatch(EulerWedgeError, ValueError):
    code = "dimension_mismatch"


class ModularRelationViolation(EulerWedgeError, ValueError):
    code = "modular_relation_violation"


class AmbiguousInclusion(EulerWedgeError, RuntimeError):
    code = "ambiguous_inclusion"


class PreconditionViolated(EulerWedgeError, ValueError):
    code = "precondition_violated"

    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        msg = f"candidate net violates ({axiom})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ResolutionTooCoarse(EulerWedgeError, ValueError):
    code = "resolution_too_coarse"


class GeneratorIllConditioned(EulerWedgeError, ArithmeticError):
    code = "generator_ill_conditioned"


class EmptyDictionary(EulerWedgeError, ValueError):
    code = "empty_dictionary"


class ParseError(EulerWedgeError, ValueError):
    code = "parse_error"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateRankWarning(UserWarning):
    """A singular value sits close to the rank threshold."""
