"""Instance parameters and the vertex representation."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from kneserlab.exceptions import InvalidParametersError

# A vertex is a strictly increasing tuple of 1-based nodes of length k.
Vertex = tuple[int, ...]
NodeSet = tuple[int, ...]


class InstanceParams(BaseModel):
    """Node count n, subset size k and color count m of a Kneser instance.

    Construction only enforces n >= k >= 1 and m >= 0. Operations that need
    the classical n >= 2k > 1 call :meth:`require_kneser`.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    m: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_sizes(self) -> InstanceParams:
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        return self

    @classmethod
    def kneser(cls, n: int, k: int) -> InstanceParams:
        """The (n, k) instance with m = n - 2k + 1 colors."""
        params = cls(n=n, k=k, m=max(n - 2 * k + 1, 0))
        params.require_kneser()
        return params

    @classmethod
    def optimal(cls, n: int, k: int) -> InstanceParams:
        """The (n, k) instance with m = n - 2k + 2 colors, which is colorable."""
        params = cls(n=n, k=k, m=n - 2 * k + 2)
        params.require_kneser()
        return params

    def require_kneser(self) -> None:
        if not self.n >= 2 * self.k > 1:
            raise InvalidParametersError(
                f"need n >= 2k > 1, got n={self.n}, k={self.k}"
            )

    @property
    def label(self) -> str:
        return f"({self.n},{self.k},{self.m})"
