"""Exception types shared across the package."""


class PendularError(Exception):
    """Base class for all package errors."""


class ConvergenceFailure(PendularError):
    """Basis truncation cap reached without meeting the energy tolerance."""


class RootNotBracketed(PendularError):
    """Root finder bracket does not contain a sign change."""


class AsymmetricSites(PendularError):
    """Operation requires the same reduced field at both sites."""


class NonPhysicalDensity(PendularError):
    """Density matrix fails positivity beyond numerical noise."""


class LinearityCheckFailed(PendularError):
    """Weak-coupling concurrence is not linear at the probe couplings."""


class OutOfLinearRegime(PendularError):
    """Coupling too large for the linearized concurrence formula."""


class NoOnsetFound(PendularError):
    """Thermal concurrence is zero across the whole coupling bracket."""


class SingularNormalMatrix(PendularError):
    """Damped normal equations not solvable even at the damping cap."""


class MaxIterations(PendularError):
    """Optimizer hit the iteration cap before converging."""


class MoleculeNotFound(PendularError):
    """Requested molecule is not in the registry or config."""


class InvalidSpec(PendularError):
    """Molecule properties must all be positive."""
