class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class StepResolutionError(RuntimeError):
    """Branch tracking could not keep per-step jumps below the safety bound."""


class RegimeError(TypeError):
    """Exact and approximate scalars were mixed in one formal sum."""
