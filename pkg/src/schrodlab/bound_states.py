"""Bound eigenstates of the stationary Schrodinger equation.

Radial problems are solved for ``u(r) = r psi(r)``::

    -1/2 u'' + [V(r) + l(l+1)/(2 r^2)] u = E u,   u(0) = u(r_max + h) = 0

Two independent routes are provided:

* :func:`solve_radial` builds the symmetric tridiagonal 3-point Hamiltonian
  and diagonalises it (LAPACK via :func:`scipy.linalg.eigh_tridiagonal`).
* :func:`numerov_eigenvalue` shoots with the Numerov recurrence from both ends
  and bisects on the log-derivative mismatch.  It shares no code with the
  dense path apart from the potential evaluation.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .energetics import residual
from .numerics import RADIAL, UNIFORM, UNIT_L2, Wavefunction
from .potentials import COULOMB, YUKAWA, Potential, evaluate


class BoundStateError(RuntimeError):
    """The requested eigenstates could not be produced."""


class TooFewBoundStates(BoundStateError):
    def __init__(self, requested, found):
        self.requested = requested
        self.found = found
        super().__init__(f"requested {requested} bound states, only {found} exist on this grid")


@dataclass(frozen=True)
class EigenSolution:
    energy: float
    psi: Wavefunction
    index: int
    method: str
    residual_sup: float
    nodes: int = 0
    l: int = 0


def _count_nodes(v, floor=1e-6):
    """Sign changes of ``v``, ignoring the tails where |v| is below ``floor * max|v|``."""
    v = np.asarray(v)
    keep = np.abs(v) > floor * np.abs(v).max()
    s = np.sign(v[keep])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _fix_phase(v):
    """Flip the sign so the first local maximum of |v| (above noise) is positive."""
    a = np.abs(v)
    big = a > 1e-3 * a.max()
    i = 0
    while i + 1 < len(v) and not (big[i] and a[i] >= a[i + 1]):
        i += 1
    return -v if v[i] < 0 else v


def radial_hamiltonian(pot, l, grid):
    """Diagonal and off-diagonal of the 3-point Hamiltonian acting on u = r psi."""
    if grid.kind != RADIAL:
        raise ValueError("radial solver needs a radial grid")
    r, h = grid.nodes, grid.h
    v = np.asarray(evaluate(pot, r), dtype=float) + l * (l + 1) / (2.0 * r**2)
    if not np.all(np.isfinite(v)):
        raise ValueError("potential is not finite on the grid")
    diag = 1.0 / h**2 + v
    off = np.full(grid.n - 1, -0.5 / h**2)
    return diag, off


def solve_radial(pot, l=0, k=1, grid=None):
    """The ``k`` lowest radial eigenpairs, energies ascending.

    Each eigenvector ``u`` is turned into ``psi = u/r``, normalised with
    ``4 pi r^2`` quadrature weights and sign-fixed.  States at or above
    ``pot.asymptote`` are not bound; asking for more bound states than exist
    raises :class:`TooFewBoundStates`.
    """
    from .numerics import radial_grid

    grid = grid or radial_grid()
    if k < 1:
        raise ValueError("k must be at least 1")
    diag, off = radial_hamiltonian(pot, l, grid)
    try:
        energies, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
    except np.linalg.LinAlgError as exc:
        raise BoundStateError(f"tridiagonal eigensolver failed: {exc}") from exc
    bound = int(np.count_nonzero(energies < pot.asymptote))
    if bound < k:
        raise TooFewBoundStates(k, bound)

    r = grid.nodes
    states = []
    for E, u in zip(energies, vecs.T):
        u = _fix_phase(u)
        psi = Wavefunction(grid, u / r).normalized()
        res = residual(psi, pot, E, order=2)
        states.append((float(E), _count_nodes(u), psi, res.sup_norm))
    states.sort(key=lambda s: (s[0], s[1]))
    return [
        EigenSolution(E, psi, i, "dense", sup, nodes, l)
        for i, (E, nodes, psi, sup) in enumerate(states)
    ]


def solve_1d(pot, k=1, grid=None):
    """Lowest ``k`` eigenpairs on a uniform 1D grid with Dirichlet ends (potential at |x|)."""
    if grid is None or grid.kind != UNIFORM:
        raise ValueError("solve_1d needs a uniform grid")
    x, h = grid.nodes, grid.h
    v = np.asarray(evaluate(pot, np.abs(x)), dtype=float)
    diag = 1.0 / h**2 + v
    off = np.full(grid.n - 1, -0.5 / h**2)
    energies, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
    out = []
    for i, (E, y) in enumerate(zip(energies, vecs.T)):
        y = _fix_phase(y)
        psi = Wavefunction(grid, y).normalized()
        sup = residual(psi, pot, E, order=2).sup_norm
        out.append(EigenSolution(float(E), psi, i, "dense", sup, _count_nodes(y), 0))
    return out


def ground_state_closed_form(grid):
    """Hydrogen 1s, ``exp(-r)/sqrt(pi)``, sampled on a radial grid with E = -1/2."""
    if grid.kind != RADIAL:
        raise ValueError("closed-form 1s state needs a radial grid")
    psi = Wavefunction(grid, np.exp(-grid.nodes) / math.sqrt(math.pi), UNIT_L2)
    sup = residual(psi, Potential(COULOMB), -0.5).sup_norm
    return EigenSolution(-0.5, psi, 0, "closed-form", sup, 0, 0)


# Numerov shooting


def _f_values(pot, E, l, r):
    """Coefficient f in u'' = f u on the grid nodes."""
    return 2.0 * (np.asarray(evaluate(pot, r), dtype=float) - E) + l * (l + 1) / r**2


def _origin_fu(pot, E, l, u1, h):
    """Limit of f(r) u(r) at r = 0, where f diverges and u vanishes.

    Uses the small-r series ``u = a (r - Z r^2 + (Z^2 - E')/3 r^3)`` for l = 0,
    with ``E' = E - Z mu`` absorbing the constant term of a Yukawa potential.
    """
    Z = pot.coulomb_strength
    if l == 0:
        if Z == 0:
            return 0.0
        e_eff = E - (Z * pot.mu if pot.kind == YUKAWA else 0.0)
        slope = u1 / (h - Z * h**2 + (Z * Z - e_eff) / 3.0 * h**3)
        return -2.0 * Z * slope
    if l == 1:
        return 2.0 * u1 / h**2
    return 0.0


def _turning_index(f):
    """Outermost node where the motion is classically allowed (f < 0)."""
    allowed = np.nonzero(f < 0)[0]
    if len(allowed) == 0:
        raise BoundStateError("trial energy lies below the potential everywhere on the grid")
    return int(min(max(allowed[-1], 2), len(f) - 3))


_BIG = 1e150


def numerov_mismatch(pot, E, grid, l=0, match=None):
    """Log-derivative mismatch at the matching node between outward and inward Numerov solutions.

    Both solutions are scaled to agree at the matching node ``m`` (by default
    the outermost classical turning point).  The returned value is
    ``(y_in[m+1] - y_out[m+1]) / (h u[m])`` with ``y = (1 - h^2 f/12) u``,
    i.e. the jump in ``u'/u``.  It vanishes exactly at an eigenvalue.
    """
    if grid.kind != RADIAL:
        raise ValueError("Numerov shooting needs a radial grid")
    if not E < pot.asymptote:
        raise ValueError(f"trial energy {E} is not below the asymptote {pot.asymptote}")
    r, h = grid.nodes, grid.h
    f = _f_values(pot, E, l, r)
    c = h * h / 12.0
    m = _turning_index(f) if match is None else int(match)
    n = len(r)

    # grid node i sits at r = (i + 1) h; the origin is one step before node 0.
    # Numerov: y = (1 - c f) u,  y[i+1] = 2 y[i] - y[i-1] + h^2 f[i] u[i]
    k = [1.0 - c * fi for fi in f.tolist()]
    fl = f.tolist()

    u1 = h
    # y at the origin is u0 - c (f u)(0) = -c (f u)(0)
    y_before = -c * _origin_fu(pot, E, l, u1, h)
    y_cur = k[0] * u1
    u_out = [u1]
    for i in range(0, m + 1):
        y_next = 2.0 * y_cur - y_before + h * h * fl[i] * (y_cur / k[i])
        y_before, y_cur = y_cur, y_next
        u_out.append(y_cur / k[i + 1])
        if abs(y_cur) > _BIG:
            y_before /= _BIG
            y_cur /= _BIG
            u_out = [v / _BIG for v in u_out]
    y_out_next = y_cur

    # inward from u = 0 one step beyond r_max, matching the dense solver's Dirichlet end
    u_in = [0.0] * (n + 1)
    u_in[n - 1] = 1e-30
    y_after = 0.0
    y_cur = k[n - 1] * u_in[n - 1]
    for i in range(n - 1, m, -1):
        y_prev = 2.0 * y_cur - y_after + h * h * fl[i] * (y_cur / k[i])
        y_after, y_cur = y_cur, y_prev
        u_in[i - 1] = y_cur / k[i - 1]
        if abs(y_cur) > _BIG:
            y_after /= _BIG
            y_cur /= _BIG
            for j in range(i - 1, n):
                u_in[j] /= _BIG
    um_out = u_out[m]
    um_in = u_in[m]
    if um_out == 0.0 or um_in == 0.0 or not math.isfinite(um_in / um_out):
        raise BoundStateError("Numerov rescaling failed at the matching node")
    scale = um_out / um_in
    y_in_next = k[m + 1] * u_in[m + 1] * scale
    return (y_in_next - y_out_next) / (h * um_out)


def numerov_eigenvalue(pot, bracket, grid, l=0, tol=1e-10, max_iter=200):
    """Bisect the Numerov mismatch over ``bracket = (E_lo, E_hi)`` to ``tol`` hartree.

    The matching node is fixed from the bracket midpoint so the mismatch is a
    continuous function of E during the search.
    """
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise ValueError("bracket must be (E_lo, E_hi) with E_lo < E_hi")
    mid = 0.5 * (lo + hi)
    match = _turning_index(_f_values(pot, mid, l, grid.nodes))
    m_lo = numerov_mismatch(pot, lo, grid, l, match)
    m_hi = numerov_mismatch(pot, hi, grid, l, match)
    if m_lo == 0.0:
        return lo
    if m_hi == 0.0:
        return hi
    if (m_lo > 0) == (m_hi > 0):
        raise BoundStateError(f"mismatch has the same sign at both ends of {bracket}")
    scale = max(abs(m_lo), abs(m_hi))
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        m_mid = numerov_mismatch(pot, mid, grid, l, match)
        if (m_mid > 0) == (m_lo > 0):
            lo, m_lo = mid, m_mid
        else:
            hi = mid
    E = 0.5 * (lo + hi)
    # a sign change through a pole (inner solution vanishing at the match node) is not an eigenvalue
    if abs(numerov_mismatch(pot, E, grid, l, match)) > scale:
        raise BoundStateError(f"no eigenvalue in {bracket}: mismatch diverges instead of vanishing")
    return E
