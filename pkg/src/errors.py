"""
Exception hierarchy shared by every module.

All errors derive from ValueError so callers that only know about bad input
keep working; the CLI reports the message text verbatim.
"""


class TutteSignError(ValueError):
    """Base class for domain errors"""


class CapExceededError(TutteSignError):
    """A configured enumeration cap would be exceeded"""


class InterpolationError(TutteSignError):
    """Interpolation nodes are degenerate or too few"""


class GraphFormatError(TutteSignError):
    """Malformed graph, gadget or matroid text"""


class SingularCompositionError(TutteSignError):
    """A series composition hit a zero denominator"""


class GadgetError(TutteSignError):
    """A gadget does not implement a weight or fails certification"""


class HypothesisError(TutteSignError):
    """A construction was asked for at a point outside its hypotheses"""


class InstanceTooLargeError(TutteSignError):
    """A backtracking decider exhausted its node budget"""


class ReductionError(TutteSignError):
    """The cut-counting reduction could not complete"""
