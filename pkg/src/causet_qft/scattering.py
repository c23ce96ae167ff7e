"""Discrete-time scattering: difference calculus, step products and amplitudes.

The scattering operator obeys the one-step recursion S(k+1) = (I + iH(k))S(k)
starting from the identity.  Expanding the product gives the sum over
strictly decreasing time tuples, which is rebuilt independently here and
compared against the recursion.  Orders in the interaction are tracked
exactly during the recursion (order k picks up one factor of H per step),
so per-order amplitude contributions come from bookkeeping, not numerical
differentiation in the coupling.

The model interaction couples two scalar species on a tensor product of
truncated Fock spaces: the density at a spacetime point is the squared
self-adjoint field of the first species tensored with the field of the
second, scaled by the coupling constant.  One factor of the second species
per density insertion forces every odd-order two-particle amplitude between
its vacuum states to vanish; the engine verifies that numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import FockSpace, basis_unit, fock_space, vacuum, xi_matrix
from .lattice import Vec4, vectors_with_norm_up_to
from .momentum import hyperboloid
from .util import op_matmul

__all__ = [
    "InteractionConfig",
    "ScatteringModel",
    "ScatteringSeries",
    "difference_op",
    "product_formula",
    "expansion_formula",
    "build_model",
    "window_slice",
    "interaction_hamiltonian",
    "scattering_series",
    "amplitude",
    "order_parity_check",
]


def difference_op(seq: list[np.ndarray]) -> list[np.ndarray]:
    """Forward difference of an operator sequence; length drops by one."""
    if len(seq) < 2:
        raise ValueError("difference needs at least two terms")
    return [seq[i + 1] - seq[i] for i in range(len(seq) - 1)]


def product_formula(a_seq: list[np.ndarray], x0: np.ndarray, n: int) -> np.ndarray:
    """Ordered product [I + A(n-1)] ... [I + A(0)] X(0)."""
    if n < 0:
        raise ValueError("step count must be nonnegative")
    dim = x0.shape[0]
    eye = np.eye(dim, dtype=complex)
    out = x0.astype(complex)
    for j in range(n):
        out = op_matmul(eye + a_seq[j], out)
    return out


def expansion_formula(a_seq: list[np.ndarray], x0: np.ndarray, n: int) -> np.ndarray:
    """Sum over strictly decreasing index tuples of A products, applied to X(0).

    Independent of :func:`product_formula`; the two must agree.
    """
    from itertools import combinations

    dim = x0.shape[0]
    total = np.eye(dim, dtype=complex)
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            term = None
            for j in reversed(combo):  # decreasing order, leftmost largest
                term = a_seq[j] if term is None else op_matmul(term, a_seq[j])
            total = total + term
    return op_matmul(total, x0.astype(complex))


@dataclass(frozen=True)
class InteractionConfig:
    """Couplings, truncations and the spacetime window of the model."""

    coupling: float
    pi_mass_sq: int
    sigma_mass_sq: int
    energy_cap: int
    pi_particle_cap: int
    sigma_particle_cap: int
    window_radius: int
    horizon: int

    def validate(self) -> None:
        if self.horizon < 0:
            raise ValueError("horizon must be nonnegative")
        if self.window_radius < 0:
            raise ValueError("window radius must be nonnegative")
        if self.pi_particle_cap < 2 or self.sigma_particle_cap < 1:
            raise ValueError(
                "truncation caps too small to represent the interaction: need at "
                "least two pi particles and one sigma particle"
            )
        if self.pi_mass_sq < 0 or self.sigma_mass_sq < 0:
            raise ValueError("squared masses must be nonnegative")


def window_slice(cfg: InteractionConfig, t: int) -> tuple[Vec4, ...]:
    """Cone vertices at time t within the configured spatial radius."""
    cap = min(t, cfg.window_radius)
    return tuple(Vec4(t, v.n, v.p, v.q) for v in vectors_with_norm_up_to(cap * cap))


@dataclass(frozen=True)
class ScatteringModel:
    """Tensor-product arena with the per-time-slice interaction Hamiltonians."""

    cfg: InteractionConfig
    pi_space: FockSpace
    sigma_space: FockSpace

    @property
    def dim(self) -> int:
        return self.pi_space.dim * self.sigma_space.dim

    def hamiltonian(self, t: int) -> np.ndarray:
        return interaction_hamiltonian(self, t)


def build_model(cfg: InteractionConfig) -> ScatteringModel:
    cfg.validate()
    pi_h = hyperboloid(cfg.pi_mass_sq, cfg.energy_cap)
    sigma_h = hyperboloid(cfg.sigma_mass_sq, cfg.energy_cap)
    return ScatteringModel(
        cfg=cfg,
        pi_space=fock_space(pi_h, cfg.pi_particle_cap),
        sigma_space=fock_space(sigma_h, cfg.sigma_particle_cap),
    )


def interaction_hamiltonian(model: ScatteringModel, t: int) -> np.ndarray:
    """g * (pi field squared) tensor (sigma field), summed over the window slice.

    An empty slice yields the zero operator.
    """
    cfg = model.cfg
    out = np.zeros((model.dim, model.dim), dtype=complex)
    for x in window_slice(cfg, t):
        pi_x = xi_matrix(x, model.pi_space)
        sigma_x = xi_matrix(x, model.sigma_space)
        out += cfg.coupling * np.kron(op_matmul(pi_x, pi_x), sigma_x)
    return out


@dataclass(frozen=True)
class ScatteringSeries:
    """Step operators S(0..n), final per-order contributions, and checks."""

    steps: tuple[np.ndarray, ...]
    final_orders: tuple[np.ndarray, ...]
    expansion_defect: float
    unitarity_defects: tuple[float, ...]

    @property
    def final(self) -> np.ndarray:
        return self.steps[-1]


def scattering_series(model: ScatteringModel, expansion_tol: float = 1e-9) -> ScatteringSeries:
    """Build S by the recursion, track orders, and cross-check the expansion."""
    n = model.cfg.horizon
    dim = model.dim
    eye = np.eye(dim, dtype=complex)
    hams = [model.hamiltonian(t) for t in range(n)]

    orders = [eye] + [np.zeros((dim, dim), dtype=complex) for _ in range(n)]
    steps = [eye]
    current = eye
    for t in range(n):
        ih = 1j * hams[t]
        new_orders = [orders[0]]
        for k in range(1, n + 1):
            new_orders.append(orders[k] + op_matmul(ih, orders[k - 1]))
        orders = new_orders
        current = op_matmul(eye + ih, current)
        steps.append(current)

    expanded = expansion_formula([1j * h for h in hams], eye, n)
    defect = float(np.max(np.abs(expanded - current))) if n > 0 else 0.0
    order_sum_defect = float(np.max(np.abs(sum(orders) - current)))
    if max(defect, order_sum_defect) > expansion_tol:
        raise AssertionError(
            f"recursion/expansion mismatch: {defect} (orders: {order_sum_defect})"
        )
    unit = tuple(
        float(np.max(np.abs(op_matmul(s.conj().T, s) - eye))) for s in steps
    )
    return ScatteringSeries(
        steps=tuple(steps),
        final_orders=tuple(orders),
        expansion_defect=defect,
        unitarity_defects=unit,
    )


def two_pi_state(model: ScatteringModel, p: Vec4, q: Vec4) -> np.ndarray:
    """Normalized symmetric two-particle state tensored with the sigma vacuum."""
    h = model.pi_space.hyperboloid
    pair = (h.index(p), h.index(q))
    return np.kron(basis_unit(model.pi_space, pair), vacuum(model.sigma_space))


@dataclass(frozen=True)
class AmplitudeReport:
    total: complex
    per_order: tuple[complex, ...]
    probability: float
    dims: tuple[int, int]


def amplitude(
    model: ScatteringModel,
    incoming: tuple[Vec4, Vec4],
    outgoing: tuple[Vec4, Vec4],
    series: ScatteringSeries | None = None,
) -> AmplitudeReport:
    """<out| S |in> for two-particle states of the first species."""
    series = series or scattering_series(model)
    vec_in = two_pi_state(model, *incoming)
    vec_out = two_pi_state(model, *outgoing)
    per_order = tuple(complex(np.vdot(vec_out, s @ vec_in)) for s in series.final_orders)
    total = complex(np.vdot(vec_out, series.final @ vec_in))
    return AmplitudeReport(
        total=total,
        per_order=per_order,
        probability=float(abs(total) ** 2),
        dims=(model.pi_space.dim, model.sigma_space.dim),
    )


def order_parity_check(
    model: ScatteringModel,
    incoming: tuple[Vec4, Vec4],
    outgoing: tuple[Vec4, Vec4],
    tol: float = 1e-10,
) -> dict:
    """Verify vanishing odd orders (and order zero for distinct in/out states)."""
    series = scattering_series(model)
    report = amplitude(model, incoming, outgoing, series)
    odd_max = max(
        (abs(c) for k, c in enumerate(report.per_order) if k % 2 == 1), default=0.0
    )
    distinct = set(incoming) != set(outgoing)
    order0 = abs(report.per_order[0])
    ok = odd_max <= tol and (order0 <= tol or not distinct)
    return {
        "per_order_abs": tuple(abs(c) for c in report.per_order),
        "odd_order_max": odd_max,
        "order0": order0,
        "order2": report.per_order[2] if len(report.per_order) > 2 else 0.0,
        "distinct_states": distinct,
        "passes": ok,
        "unitarity_defects": series.unitarity_defects,
    }
