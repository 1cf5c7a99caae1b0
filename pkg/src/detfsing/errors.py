"""Exception types shared across the workbench."""


class KernelError(Exception):
    """Invalid ring, monomial, or polynomial construction."""


class RingMismatch(KernelError):
    """Operands live in different ring contexts."""


class ParseError(KernelError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UndeclaredVariable(ParseError):
    """Variable name in the input text is not declared in the ring."""


class BudgetExceeded(Exception):
    """A Groebner run hit its step, degree, or wall-clock cap.

    Carries the partial statistics of the aborted run; callers must treat
    this as inconclusive, never as a negative mathematical answer.
    """

    def __init__(self, stats, reason):
        super().__init__(f"budget exceeded: {reason}")
        self.stats = stats
        self.reason = reason


class IterationCapExceeded(Exception):
    """Saturation did not stabilize within the iteration cap."""


class ImproperIdeal(Exception):
    """Operation requires a proper ideal but 1 belongs to it."""


class PreconditionViolated(Exception):
    """A caller-supplied argument fails a stated precondition."""


class SeedIncompatible(Exception):
    """A closure seed is not compatible with the given map."""

    def __init__(self, seed_text, witness_text):
        super().__init__(f"seed {seed_text} is not compatible; witness {witness_text}")
        self.seed_text = seed_text
        self.witness_text = witness_text


class NodeCapExceeded(Exception):
    """Lattice closure hit the node cap (partial lattice available)."""


class UsageError(Exception):
    """Malformed request or command-line parameters."""
