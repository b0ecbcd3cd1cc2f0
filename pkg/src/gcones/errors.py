"""Exception hierarchy.  Every error carries a short machine-readable code."""


class GConesError(Exception):
    code = "error"


class InputError(GConesError):
    code = "input"


class ParseError(InputError):
    code = "parse"


class NotPrime(InputError):
    code = "not-prime"


class NotAdmissible(InputError):
    code = "not-admissible"


class NotFiniteDimensional(InputError):
    code = "not-finite-dimensional"


class CompletionOverflow(InputError):
    code = "completion-overflow"


class NotProjective(GConesError):
    code = "not-projective"


class CapExceeded(GConesError):
    code = "cap-exceeded"


class SplitUncertain(GConesError):
    code = "split-uncertain"


class NoConsensus(GConesError):
    code = "no-consensus"

    def __init__(self, message, tallies=None):
        super().__init__(message)
        self.tallies = tallies or {}


class NotTauRigid(GConesError):
    code = "not-tau-rigid"


class ApproximationFailed(GConesError):
    code = "approximation-failed"
