"""Exception types shared across the package."""


class GyrospecError(ValueError):
    """Base class for all domain errors."""


class NotHermitian(GyrospecError):
    """Matrix handed to the Hermitian eigensolver is not Hermitian within tolerance."""


class NoConvergence(GyrospecError):
    """Jacobi sweeps exceeded the hard cap without reaching the off-diagonal target."""


class InvalidParams(GyrospecError):
    """Physical parameters violate their constraints (non-positive moments, bad unit vector, ...)."""


class NotSymmetric(GyrospecError):
    """Operation requires a symmetric top (I1 == I2) but the moments differ."""


class BadQuantumNumbers(GyrospecError):
    """Quantum-number labels outside the admissible range for the requested state."""


class DegenerateEnergy(GyrospecError):
    """Energy is zero, so the spinor construction would divide by zero."""


class SuperluminalVelocity(GyrospecError):
    """Boost velocity at or above the speed of light."""


class NotTimelike(GyrospecError):
    """Four-momentum is not timelike, so no rest frame exists."""


class DegenerateInertia(GyrospecError):
    """A principal moment of inertia is (numerically) zero; the inverse square root is singular."""


class ConfigError(GyrospecError):
    """Run configuration is invalid; message names the offending field."""
