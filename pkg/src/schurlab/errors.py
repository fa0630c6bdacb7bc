"""Exception hierarchy shared by all schurlab modules."""


class SchurlabError(Exception):
    pass


class InvalidGroup(SchurlabError, ValueError):
    pass


class CapExceeded(SchurlabError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class GroupMismatch(SchurlabError, ValueError):
    pass


class NotNested(SchurlabError, ValueError):
    pass


class NotASubgroup(SchurlabError, ValueError):
    pass


# S-ring axiom violations
class NotAPartition(SchurlabError, ValueError):
    pass


class IdentityNotSingleton(SchurlabError, ValueError):
    pass


class NotInverseClosed(SchurlabError, ValueError):
    pass


class NotClosedUnderProduct(SchurlabError, ValueError):
    def __init__(self, i, j, g, h):
        super().__init__(
            f"product of classes {i} and {j} has unequal coefficients on elements {g} and {h}")
        self.classes = (i, j)
        self.witness = (g, h)


class NotCoprime(SchurlabError, ValueError):
    pass


class NotABasicSet(SchurlabError, ValueError):
    pass


class NotAnASet(SchurlabError, ValueError):
    pass


class NotASection(SchurlabError, ValueError):
    pass


class NotOvergroup(SchurlabError, ValueError):
    pass


class NotSubgroup(SchurlabError, ValueError):
    pass


class NotGeneralizedWreath(SchurlabError, ValueError):
    pass


class NotAutomorphisms(SchurlabError, ValueError):
    pass


class IdentityInConnectionSet(SchurlabError, ValueError):
    pass


class NotSquareOrder(SchurlabError, ValueError):
    pass


class AxiomViolation(SchurlabError):
    def __init__(self, which, detail=""):
        super().__init__(f"net axiom {which} violated {detail}".strip())
        self.which = which


class NotStronglyRegular(SchurlabError):
    def __init__(self, pair, detail=""):
        super().__init__(f"not strongly regular at pair {pair} {detail}".strip())
        self.pair = pair


class NotApplicable(SchurlabError):
    pass


class NotWeakAutomorphism(SchurlabError, ValueError):
    pass


class NoPcpSetFound(SchurlabError):
    pass


class EmptyProfile(SchurlabError, ValueError):
    pass


class DominanceViolation(SchurlabError, ValueError):
    pass


class UnknownStatement(SchurlabError, KeyError):
    pass
