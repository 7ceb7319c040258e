import os

from .errors import DimensionTooLargeError

ENV_VAR = "SHOR_SPECTRA_MAX_DIM"


def check_dim(dim: int, default_max: int, what: str) -> None:
    """Raise if ``dim`` exceeds the dense-size guard.

    ``SHOR_SPECTRA_MAX_DIM`` replaces every default limit when set.
    """
    override = os.environ.get(ENV_VAR)
    limit = int(override) if override else default_max
    if dim > limit:
        raise DimensionTooLargeError(
            f"{what}: dimension {dim} exceeds guard {limit} (set {ENV_VAR} to override)"
        )
