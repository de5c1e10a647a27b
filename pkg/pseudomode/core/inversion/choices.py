# -*- coding: utf-8 -*-
"""
choices

Free parameters of the bilinear inversion.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import ValidationError


@dataclass(frozen=True, eq=False)
class InversionChoices:
    """Choices fixing one member of the family of positive matrices ``S†S``.

    In the orthonormal basis built from ``v`` and ``u`` the matrix ``S†S``
    is determined by its lower block ``Y = [[A22, cross†], [cross, B]]``;
    ``A12`` and ``A22`` are tied by ``A22 = -A12 u₁/u₂``.  ``a_prime`` is
    the alternative parametrisation of two-mode fits with ``u = (1, 1)``.
    Unset fields take their defaults at inversion time.
    """

    u: np.ndarray | None = None
    a12: complex | None = None
    a22: float | None = None
    b: np.ndarray | None = None
    cross: np.ndarray | None = None
    a_prime: float | None = None

    def __post_init__(self) -> None:
        if self.u is not None:
            u = np.array(self.u, dtype=complex, ndmin=1)
            if u.ndim != 1:
                raise ValidationError("u must be a vector")
            object.__setattr__(self, "u", u)
        if self.b is not None:
            b = np.array(self.b, dtype=complex, ndmin=2)
            object.__setattr__(self, "b", b.reshape(0, 0) if b.size == 0 else b)
        if self.cross is not None:
            object.__setattr__(self, "cross", np.array(self.cross, dtype=complex, ndmin=1))
        if self.a12 is not None and self.a22 is not None:
            raise ValidationError("Give either A12 or A22, not both")
        if self.a_prime is not None and any(
            item is not None for item in (self.a12, self.a22, self.b, self.cross)
        ):
            raise ValidationError("a_prime replaces the block choices A12, A22, B and cross")

    def vector(self, n: int) -> np.ndarray:
        """Return ``u`` for ``n`` modes, defaulting to all ones."""
        if self.u is None:
            return np.ones(n, dtype=complex)
        if self.u.shape != (n,):
            raise ValidationError(f"u must have {n} entries, got {self.u.shape[0]}")
        if np.any(self.u == 0):
            raise ValidationError("u must not have zero entries")
        return self.u

    def block(self, n: int) -> np.ndarray:
        """Return ``B`` of size ``(n-2) × (n-2)``, defaulting to the identity."""
        size = max(n - 2, 0)
        if self.b is None:
            return np.eye(size, dtype=complex)
        if self.b.shape != (size, size):
            raise ValidationError(f"B must be {size}×{size}, got {self.b.shape}")
        return self.b

    def coupling(self, n: int) -> np.ndarray:
        """Return ``cross`` of length ``n - 2``, defaulting to zero."""
        size = max(n - 2, 0)
        if self.cross is None:
            return np.zeros(size, dtype=complex)
        if self.cross.shape != (size,):
            raise ValidationError(f"cross must have {size} entries, got {self.cross.shape[0]}")
        return self.cross

    def as_dict(self) -> dict:
        """Return a JSON-friendly mapping with complex values as ``[re, im]`` pairs."""

        def pairs(value):
            # empty blocks of one- and two-mode fits are the defaults
            if value is None or np.size(value) == 0:
                return None
            array = np.asarray(value, dtype=complex)
            return np.stack([array.real, array.imag], axis=-1).tolist()

        return {
            "u": pairs(self.u),
            "a12": pairs(self.a12),
            "a22": self.a22,
            "b": pairs(self.b),
            "cross": pairs(self.cross),
            "a_prime": self.a_prime,
        }


__all__ = ["InversionChoices"]


# The End
