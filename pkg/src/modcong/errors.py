"""Exception hierarchy."""


class InvalidSubgroup(ValueError):
    """The permutation pair is not the coset action of a subgroup of SL2(Z).

    ``relation`` names the violated condition.
    """

    relation = ""

    def __init__(self, detail=""):
        msg = f"{type(self).__name__}: {self.relation}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotTransitive(InvalidSubgroup):
    relation = "<L, R> acts transitively"


class BadOrder4(InvalidSubgroup):
    relation = "(L R^-1 L)^4 = 1"


class BadAmalgam(InvalidSubgroup):
    relation = "(L R^-1 L)^2 = (L R^-1 L R)^3"


class BadBraid(InvalidSubgroup):
    relation = "L R^-1 L = R^-1 L R^-1"


class NotInvertible(ValueError):
    pass


class PredicateNotSubgroup(ValueError):
    pass


class OracleTooLarge(ValueError):
    pass


class RetryBudgetExhausted(RuntimeError):
    pass
