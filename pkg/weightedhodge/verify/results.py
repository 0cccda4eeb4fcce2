import math

from .instances import digest

__all__ = ["CheckResult", "Case"]


class CheckResult:
    """
    One property checked on one instance.

    Attributes:
        suite (str): Suite that ran the check.
        property (str): Name of the checked property.
        seed (int): Seed that replays the instance.
        index (int): Position of the check within the (suite, seed) run.
        instance (dict): Descriptor (``n``, ``k``, weights digest, ...).
        residual (float): Measured violation; ``inf`` for a structural
            mismatch.
        tolerance (float): Largest residual that passes.
        witness (dict): Extra data kept on failure.

    """

    def __init__(
        self,
        suite,
        property,
        seed,
        index,
        instance,
        residual,
        tolerance,
        witness=None,
    ):
        self.suite = suite
        self.property = property
        self.seed = seed
        self.index = index
        self.instance = instance
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.passed = self.residual <= self.tolerance
        self.witness = witness if not self.passed else None

    @property
    def id(self):
        return f"{self.suite}/{self.seed:06d}/{self.index:04d}"

    def to_dict(self):
        residual = self.residual if math.isfinite(self.residual) else None
        return {
            "id": self.id,
            "suite": self.suite,
            "property": self.property,
            "seed": self.seed,
            "instance": self.instance,
            "passed": self.passed,
            "residual": residual,
            "tolerance": self.tolerance,
            "witness": self.witness,
        }

    def __repr__(self):
        status = "pass" if self.passed else "FAIL"
        return f"CheckResult({self.id}, {self.property}, {status})"


class Case:
    """Collects the results of one (suite, seed) run."""

    def __init__(self, suite, seed, rng, max_n):
        self.suite = suite
        self.seed = seed
        self.rng = rng
        self.max_n = max_n
        self.results = []

    def record(
        self, property, residual, tolerance=0.0, W=None, witness=None, **info
    ):
        instance = dict(info)
        if W is not None:
            instance["n"] = W.n
            instance["dim"] = W.dim
            instance["weights"] = digest(W)
        self.results.append(
            CheckResult(
                self.suite,
                property,
                self.seed,
                len(self.results),
                instance,
                residual,
                tolerance,
                witness,
            )
        )

    def require(self, property, condition, W=None, witness=None, **info):
        """Record an exact (boolean) check."""
        self.record(
            property,
            0.0 if condition else math.inf,
            0.0,
            W=W,
            witness=witness,
            **info,
        )
