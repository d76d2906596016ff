"""Multiplicity vectors, valuation vectors and stratum codimensions.

A stratum is indexed by a subset ``I`` of the intersection pairs, a subset
``J`` of the branches, and a multiplicity record: ``n_i >= 0`` free points on
each component, a pair ``(n', n'') >= (1, 1)`` for each sigma in ``I`` and a
pair ``(t', t'') >= (1, 1)`` for each branch in ``J``.

The derived quantities:

* ``nhat_i``: intersection degree of the strict transform with ``E_i``;
  the sum of ``n_i``, the primed multiplicities of pairs having ``i`` as
  first or second leg respectively, and the first branch multiplicities.
* ``w = nhat . M``: divisorial valuation vector (exact rationals; integral
  whenever the graph is totally rational).
* ``v_j = w_{attach(j)} + t''_j * h_{attach(j)}`` for ``j`` in ``J``, and
  plain ``w_{attach(j)}`` otherwise.
* the divisorial-ideal codimension ``hoskin_deligne(w) = 1/2 sum h_i a_i
  (a_i + 1)`` where ``a = w . P`` rewrites the divisor on the total-transform
  basis.
* the stratum codimensions ``F`` and ``F^D``; the primary route composes
  ``hoskin_deligne`` with the symmetric-product dimension terms, and a
  literal transcription of the expanded quadratic form is kept alongside as
  a cross-check.

Non-integral values are carried exactly as ``Fraction`` and flagged by the
callers; nothing here rounds.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import vec_mat
from .resolution import Pair, ResolutionGraph


class SemigroupMembershipWarning(UserWarning):
    """A valuation vector fell outside the divisorial value semigroup."""


class ExponentVector(tuple):
    """A tuple of exact rationals with integrality reporting."""

    def __new__(cls, values):
        return super().__new__(cls, (Fraction(v) for v in values))

    @property
    def integral_flags(self) -> tuple[bool, ...]:
        return tuple(v.denominator == 1 for v in self)

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self)

    def __add__(self, other):
        return ExponentVector(a + b for a, b in zip(self, other, strict=True))

    def leq(self, bound) -> bool:
        return all(a <= b for a, b in zip(self, bound, strict=True))


@dataclass(frozen=True)
class Stratum:
    """Index of one connected piece of the image of the initial-form map.

    ``pair_mults[k]`` is the pair (n', n'') attached to ``pairs[k]``;
    ``branch_mults[k]`` is (t', t'') attached to branch ``branches[k]``.
    Divisorial strata simply carry ``branches = ()``.
    """

    pairs: tuple[Pair, ...]
    branches: tuple[int, ...]
    point_mults: tuple[int, ...]
    pair_mults: tuple[tuple[int, int], ...] = ()
    branch_mults: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if len(self.pair_mults) != len(self.pairs):
            raise ValueError("pair_mults must align with pairs")
        if len(self.branch_mults) != len(self.branches):
            raise ValueError("branch_mults must align with branches")
        if any(n < 0 for n in self.point_mults):
            raise ValueError("point multiplicities must be nonnegative")
        if any(a < 1 or b < 1 for a, b in self.pair_mults):
            raise ValueError("pair multiplicities must be positive")
        if any(a < 1 or b < 1 for a, b in self.branch_mults):
            raise ValueError("branch multiplicities must be positive")

    @property
    def is_divisorial(self) -> bool:
        return not self.branches

    @classmethod
    def zero(cls, s: int) -> "Stratum":
        return cls(pairs=(), branches=(), point_mults=(0,) * s)


def nhat(st: Stratum, g: ResolutionGraph) -> tuple[int, ...]:
    out = list(st.point_mults)
    if len(out) != g.s:
        raise ValueError("stratum has wrong number of components")
    for (i1, i2), (np, npp) in zip(st.pairs, st.pair_mults):
        out[i1 - 1] += np
        out[i2 - 1] += npp
    for j, (tp, _tpp) in zip(st.branches, st.branch_mults):
        out[g.branch(j).attach - 1] += tp
    return tuple(out)


def w_of(nhat_vec, g: ResolutionGraph) -> ExponentVector:
    return ExponentVector(vec_mat(nhat_vec, g.m_matrix))


def v_of(st: Stratum, g: ResolutionGraph) -> ExponentVector:
    w = w_of(nhat(st, g), g)
    second = dict(zip(st.branches, st.branch_mults))
    values = []
    for j in range(1, g.r + 1):
        attach = g.branch(j).attach
        v = w[attach - 1]
        if j in second:
            v += second[j][1] * g.degree_of(attach)
        values.append(v)
    return ExponentVector(values)


def alpha_of(w, g: ResolutionGraph) -> tuple[Fraction, ...]:
    """Coordinates of the divisor sum(w_i E_i) on the total-transform basis."""
    return tuple(Fraction(x) for x in vec_mat(tuple(w), g.proximity_matrix))


def hoskin_deligne(w, g: ResolutionGraph) -> Fraction:
    """Codimension of the divisorial ideal of ``w``: 1/2 sum h_i a_i (a_i+1).

    Valid as a dimension count only when ``w`` lies in the divisorial value
    semigroup; a negative coordinate of ``a = w . P`` triggers a
    ``SemigroupMembershipWarning`` but the formula value is still returned.
    Callers wanting the true codimension for arbitrary ``w`` must round up to
    the semigroup themselves.
    """
    alpha = alpha_of(w, g)
    if any(a < 0 for a in alpha):
        _warnings.warn(
            f"w = {tuple(map(str, w))} is not a valuation vector of the graph "
            f"(alpha = {tuple(map(str, alpha))})",
            SemigroupMembershipWarning,
            stacklevel=2,
        )
    total = sum(
        g.degree_of(i + 1) * a * (a + 1) for i, a in enumerate(alpha)
    )
    return Fraction(total) / 2


def deg_AK(nhat_vec, g: ResolutionGraph) -> Fraction:
    """Intersection degree of the divisor with the canonical cycle."""
    w = vec_mat(nhat_vec, g.m_matrix)
    eps = g.epsilon
    return Fraction(sum(nhat_vec)) - sum(
        Fraction(wi) * ei for wi, ei in zip(w, eps)
    )


def deg_AA(nhat_vec, g: ResolutionGraph) -> Fraction:
    """Self-intersection degree of the divisor: -(nhat . M . nhat)."""
    w = vec_mat(nhat_vec, g.m_matrix)
    return -sum(Fraction(wi) * ni for wi, ni in zip(w, nhat_vec))


def codim_F(st: Stratum, g: ResolutionGraph) -> Fraction:
    """Codimension of a stratum fiber, by composition.

    ``F = hoskin_deligne(w) + sum nhat_i h_i + sum_{j in J} t''_j h_j``.
    """
    nh = nhat(st, g)
    total = hoskin_deligne(w_of(nh, g), g)
    total += sum(n * g.degree_of(i + 1) for i, n in enumerate(nh))
    for j, (_tp, tpp) in zip(st.branches, st.branch_mults):
        total += tpp * g.branch(j).degree
    return total


def codim_F_literal(st: Stratum, g: ResolutionGraph) -> Fraction:
    """The expanded quadratic-form expression for ``F``, kept as a cross-check.

    The trailing linear term reads ``(2 h_i - 1)`` with the outer index, which
    is what the composition forces.
    """
    nh = nhat(st, g)
    m = g.m_matrix
    eps = g.epsilon
    s = g.s
    quad = sum(
        Fraction(m[i][k]) * nh[i] * nh[k] for i in range(s) for k in range(s)
    )
    lin = sum(
        nh[i]
        * (
            sum(Fraction(m[i][k]) * eps[k] for k in range(s))
            + (2 * g.degree_of(i + 1) - 1)
        )
        for i in range(s)
    )
    total = (quad + lin) / 2
    for j, (_tp, tpp) in zip(st.branches, st.branch_mults):
        total += tpp * g.branch(j).degree
    return total


def codim_FD(st: Stratum, g: ResolutionGraph) -> Fraction:
    """Divisorial stratum codimension; requires a branch-free stratum."""
    if not st.is_divisorial:
        raise ValueError("divisorial codimension is defined for J-free strata")
    nh = nhat(st, g)
    total = hoskin_deligne(w_of(nh, g), g)
    total += sum(n * g.degree_of(i + 1) for i, n in enumerate(nh))
    return total


def stratum_report(st: Stratum, g: ResolutionGraph) -> dict:
    """Everything the ``codim`` command prints, JSON-ready."""
    nh = nhat(st, g)
    w = w_of(nh, g)
    v = v_of(st, g)
    f = codim_F(st, g)
    report = {
        "nhat": list(nh),
        "w": [_frac_json(x) for x in w],
        "w_integral": list(w.integral_flags),
        "v": [_frac_json(x) for x in v],
        "v_integral": list(v.integral_flags),
        "alpha": [_frac_json(x) for x in alpha_of(w, g)],
        "hoskin_deligne": _frac_json(hoskin_deligne(w, g)),
        "deg_AA": _frac_json(deg_AA(nh, g)),
        "deg_AK": _frac_json(deg_AK(nh, g)),
        "F": _frac_json(f),
        "F_integral": Fraction(f).denominator == 1,
    }
    if st.is_divisorial:
        report["F_D"] = _frac_json(codim_FD(st, g))
    return report


def _frac_json(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)
