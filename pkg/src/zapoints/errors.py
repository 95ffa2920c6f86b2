"""Exception hierarchy for the package.

Every error raised by library code derives from :class:`ZapError` so callers
can catch the whole family at once.  CLI code maps them to exit code 1.
"""


class ZapError(Exception):
    """Base class for all package errors."""


# --- evaluator -------------------------------------------------------------

class PoleAtOne(ZapError):
    """Evaluation requested too close to the simple pole at s = 1."""


class PrecisionLoss(ZapError):
    """Internal convergence diagnostics exceeded the requested tolerance."""


class EvaluatorOverflow(ZapError):
    """A value left the representable double range (no inf/nan escapes)."""


class CircleHitsPole(ZapError):
    """The differentiation circle would touch or enclose the pole at s = 1."""


class OutOfRegion(ZapError):
    """Asymptotic formula requested outside its region of validity."""


# --- root scanning ---------------------------------------------------------

class BoundaryRoot(ZapError):
    """An a-point lies (numerically) on a contour segment.

    Carries the offending sample point so the caller can perturb the contour.
    """

    def __init__(self, point: complex, value: complex):
        super().__init__(f"|f| = {abs(value):.3e} at boundary point {point}")
        self.point = point
        self.value = value


class Unresolved(ZapError):
    """Adaptive phase tracking hit its bisection depth limit."""


class NewtonDiverged(ZapError):
    """Newton refinement failed to converge inside its box."""


class WindingNotOne(ZapError):
    """A box expected to contain exactly one a-point does not."""

    def __init__(self, n: int, winding: int):
        super().__init__(f"box n={n} has winding {winding}, expected 1")
        self.n = n
        self.winding = winding


class MultiplicityUnresolved(ZapError):
    """A maximally subdivided box still has winding >= 2."""


class NearRoot(ZapError):
    """Requested evaluation point is too close to a located a-point."""


# --- census ----------------------------------------------------------------

class QuadratureStall(ZapError):
    """Adaptive quadrature exceeded its refinement depth near a singularity."""


class DomainTooSmall(ZapError):
    """Height parameter below the domain threshold of a band formula."""


# --- cli / persistence -----------------------------------------------------

class ManifestMismatch(ZapError):
    """Resume attempted with a manifest that does not match the request."""
