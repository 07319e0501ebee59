"""Exception types shared across the library."""


class HellyLibError(Exception):
    """Base class for errors raised by this library."""


class NotHellyError(HellyLibError):
    """An operation required a Helly graph but the input is not Helly.

    Carries a certifying family of pairwise intersecting balls with empty
    global intersection in ``witness``.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            "graph is not Helly; witness family of %d pairwise intersecting "
            "balls has empty intersection" % len(self.witness)
        )


class SearchBudgetError(HellyLibError):
    """An exhaustive search exceeded its node budget."""
