"""Entropic functionals: von Neumann entropy, quantum relative entropy,
and the Holevo quantity of a letter ensemble.  All logarithms are base 2,
so every returned value is in bits; relative entropy may be +inf when the
first argument has support outside the second's.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidState, NotASimplex
from .states import validate_state

SUPPORT_KERNEL_TOL = 1e-12   # eigenvalues of rho below this define its kernel
SUPPORT_WEIGHT_TOL = 1e-10   # sigma weight inside the kernel above this -> +inf
_NEG_CLAMP = 1e-9            # roundoff negatives up to this are clamped to 0


def _clamp(value):
    if -_NEG_CLAMP < value < 0.0:
        return 0.0
    return value


def entropy_of_eigenvalues(eigenvalues):
    """Shannon entropy (bits) of a nonnegative spectrum; 0 log 0 = 0."""
    ev = np.clip(np.asarray(eigenvalues, dtype=float), 0.0, 1.0)
    ev = ev[ev > 0.0]
    if ev.size == 0:
        return 0.0
    return float(-(ev * np.log2(ev)).sum() + 0.0)  # +0.0 normalizes -0.0


def von_neumann(rho):
    """Von Neumann entropy S(rho) = -Tr rho log2 rho, in bits."""
    rho = validate_state(rho)
    return _clamp(entropy_of_eigenvalues(np.linalg.eigvalsh(rho)))


def relative_entropy(sigma, rho):
    """Quantum relative entropy S(sigma || rho) = Tr sigma (log sigma - log rho).

    Returns +inf exactly when sigma has weight above 1e-10 in the kernel of
    rho (eigenvalues below 1e-12).
    """
    sigma = validate_state(sigma, "sigma")
    rho = validate_state(rho, "rho")
    if sigma.shape != rho.shape:
        raise InvalidState(f"dimension mismatch {sigma.shape} vs {rho.shape}")

    ev_rho, vec_rho = np.linalg.eigh(rho)
    weights = np.einsum("ij,jk,ki->i", vec_rho.conj().T, sigma, vec_rho).real
    weights = np.clip(weights, 0.0, None)
    kernel = ev_rho < SUPPORT_KERNEL_TOL
    if weights[kernel].sum() > SUPPORT_WEIGHT_TOL:
        return math.inf

    value = -entropy_of_eigenvalues(np.linalg.eigvalsh(sigma))
    supported = ~kernel
    value -= float(weights[supported] @ np.log2(ev_rho[supported]))
    return _clamp(value)


def check_simplex(probs, n=None, tol=1e-12):
    """Validate a probability vector; returns it as a float array."""
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or (n is not None and p.size != n):
        raise NotASimplex(f"expected {n} probabilities, got shape {p.shape}")
    if p.min() < -tol or abs(p.sum() - 1.0) > tol:
        raise NotASimplex(f"probabilities {p.tolist()} do not form a simplex")
    return np.clip(p, 0.0, None)


@dataclass(frozen=True)
class LetterEnsemble:
    """Letter states with their prior probabilities."""

    letters: tuple
    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(np.asarray(w, dtype=complex) for w in self.letters))
        probs = check_simplex(self.probs, n=len(self.letters))
        object.__setattr__(self, "probs", probs)
        for i, w in enumerate(self.letters):
            validate_state(w, f"letter {i}")

    def average(self):
        """The mixture sum_i p_i W_i sent over the channel."""
        stack = np.stack(self.letters)
        return np.einsum("i,ijk->jk", self.probs, stack)


def holevo(ensemble):
    """Holevo quantity S(W) - sum_i p_i S(W_i) of an ensemble, in bits."""
    avg_entropy = entropy_of_eigenvalues(np.linalg.eigvalsh(ensemble.average()))
    letter_term = sum(
        p * entropy_of_eigenvalues(np.linalg.eigvalsh(w))
        for p, w in zip(ensemble.probs, ensemble.letters)
        if p > 0.0
    )
    return _clamp(avg_entropy - letter_term)
