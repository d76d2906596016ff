"""Stratum enumeration and assembly of the three motivic series.

Three generating series are produced from a resolution graph, all with
coefficients in the formal Grothendieck-ring model and exact rational
exponents:

* the branch series (one variable per curve branch), assembled from strata
  indexed by subsets of intersection points, subsets of branches, and
  multiplicity data;
* the divisorial series (one variable per exceptional component), same
  machinery with branch data removed and the open components taken relative
  to the exceptional divisor only;
* the divisorial extended-semigroup series, which admits a closed rational
  form: a product of intersection-pair factors over the product of
  ``(1 - t^{m_i}) (1 - e_i L t^{m_i})`` with ``m_i`` the i-th row of ``M``.

The first two series are always computed along two independent routes (the
direct stratum sum with composed codimensions, and the factored display with
the expanded quadratic-form codimension) and the routes must agree term by
term.  The closed form is cross-checked against its own stratum sum by
``expand`` versus ``divisorial_semigroup_stratum_sum``; that comparison is
this module's core self-verification.

Truncation is per variable: a series holds exactly the terms whose exponent
vector is coordinatewise at most the bound.  Because every exponent is a sum
of strictly positive contributions, truncating all intermediate products at
the bound loses nothing below it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ._linalg import vec_mat
from .codim import (
    ExponentVector,
    Stratum,
    codim_F,
    codim_F_literal,
    codim_FD,
    v_of,
    w_of,
    nhat,
)
from .grothendieck import RingElement, _frac_json, _frac_from_json
from .resolution import ResolutionGraph


class SeriesCrossCheckError(RuntimeError):
    """Two routes that must agree produced different series."""


def _grlex_key(exp: ExponentVector):
    return (sum(exp), tuple(exp))


def monomial_text(exp, var_prefix: str = "t") -> str:
    parts = []
    for idx, e in enumerate(exp, start=1):
        if e == 0:
            continue
        name = f"{var_prefix}{idx}"
        if e == 1:
            parts.append(name)
        elif isinstance(e, Fraction) and e.denominator != 1:
            parts.append(f"{name}^({e})")
        else:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass
class TruncatedSeries:
    """Finite slab of a multivariate series under a per-variable bound."""

    arity: int
    bound: tuple[Fraction, ...]
    terms: dict[ExponentVector, RingElement] = field(default_factory=dict)
    skipped_nonintegral: int = 0

    @classmethod
    def zero(cls, arity, bound) -> "TruncatedSeries":
        return cls(arity=arity, bound=tuple(Fraction(b) for b in bound))

    @classmethod
    def one(cls, arity, bound) -> "TruncatedSeries":
        series = cls.zero(arity, bound)
        series.add_term(ExponentVector((0,) * arity), RingElement.one())
        return series

    def add_term(self, exp: ExponentVector, value: RingElement) -> None:
        if not exp.leq(self.bound):
            return
        current = self.terms.get(exp)
        total = value if current is None else current + value
        if total.is_zero:
            self.terms.pop(exp, None)
        else:
            self.terms[exp] = total

    def coefficient(self, exp) -> RingElement:
        return self.terms.get(ExponentVector(exp), RingElement.zero())

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.arity == other.arity
        out = TruncatedSeries.zero(self.arity, self.bound)
        out.terms = dict(self.terms)
        for exp, value in other.terms.items():
            out.add_term(exp, value)
        return out

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.arity == other.arity
        out = TruncatedSeries.zero(self.arity, self.bound)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = e1 + e2
                if exp.leq(self.bound):
                    out.add_term(exp, c1 * c2)
        return out

    def power(self, n: int) -> "TruncatedSeries":
        result = TruncatedSeries.one(self.arity, self.bound)
        for _ in range(n):
            result = result.mul(self)
        return result

    def scaled(self, element: RingElement) -> "TruncatedSeries":
        out = TruncatedSeries.zero(self.arity, self.bound)
        for exp, value in self.terms.items():
            out.add_term(exp, value * element)
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    @property
    def is_integral_lattice(self) -> bool:
        return all(exp.is_integral for exp in self.terms) and all(
            value.has_integral_lefschetz_exponents for value in self.terms.values()
        )

    def specialize(self, spec) -> dict[ExponentVector, Fraction]:
        out = {}
        for exp, value in self.sorted_items():
            v = value.specialize(spec)
            if v != 0:
                out[exp] = v
        return out

    def to_text(self, var_prefix: str = "t") -> str:
        if not self.terms:
            return "0"
        lines = [
            f"{monomial_text(exp, var_prefix)}: {value.to_text()}"
            for exp, value in self.sorted_items()
        ]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "bound": [_frac_json(b) for b in self.bound],
            "skipped_nonintegral": self.skipped_nonintegral,
            "terms": [
                {"t": [_frac_json(e) for e in exp], "value": value.to_json()}
                for exp, value in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        series = cls.zero(int(data["arity"]), [_frac_from_json(b) for b in data["bound"]])
        series.skipped_nonintegral = int(data.get("skipped_nonintegral", 0))
        for item in data["terms"]:
            series.add_term(
                ExponentVector(_frac_from_json(e) for e in item["t"]),
                RingElement.from_json(item["value"]),
            )
        return series


# ---------------------------------------------------------------------------
# symmetric powers and stratum classes
# ---------------------------------------------------------------------------


def sym_power_class(label: str | None, degree: int, nu: int, n: int) -> RingElement:
    """Class of the n-th symmetric power of an open exceptional component.

    The component is a projective line over the field named by ``label``
    (degree-one fields contribute no symbol) with ``nu`` points removed,
    counted with their degree weights.  The value is the coefficient of
    ``x^n`` in ``(1 - e L x)^{-1} (1 - x)^{nu - 1}``: for ``nu >= 1`` the
    second factor is the finite binomial polynomial, while ``nu = 0`` makes
    it a geometric series, giving ``sum_{k<=n} (e L)^k``.
    """
    if n < 0:
        raise ValueError("symmetric power index must be nonnegative")
    if nu < 0:
        raise ValueError("removed-point count must be nonnegative")
    e = RingElement.one() if degree == 1 else RingElement.symbol(label)
    eL = e * RingElement.lefschetz()
    total = RingElement.zero()
    if nu >= 1:
        for l in range(min(n, nu - 1) + 1):
            sign = -1 if l % 2 else 1
            total = total + RingElement.integer(sign * comb(nu - 1, l)) * eL ** (n - l)
    else:
        for k in range(n + 1):
            total = total + eL**k
    return total


def stratum_class(st: Stratum, g: ResolutionGraph, variant: str = "circ") -> RingElement:
    """Grothendieck class of a stratum: symmetric powers times unit classes.

    ``circ`` removes intersection points with the whole total transform
    (branches included); ``bullet`` removes only the pairwise intersections
    of exceptional components and is the divisorial variant, which forbids
    branch data on the stratum.
    """
    if variant not in ("circ", "bullet"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "bullet" and st.branches:
        raise ValueError("bullet classes are defined for branch-free strata")
    table = g.symbol_table
    nu = g.nu_circ if variant == "circ" else g.nu_bullet
    out = RingElement.one()
    for i in range(1, g.s + 1):
        n_i = st.point_mults[i - 1]
        if n_i:
            out = out * sym_power_class(
                g.component_label(i), g.degree_of(i), nu[i - 1], n_i
            )
    for i1, i2 in st.pairs:
        out = out * table.units_class(g.pair_label(g.pair_site(i1, i2)))
    for j in st.branches:
        out = out * table.units_class(g.branch_label(j))
    return out


def _display_inner_factor(e: RingElement, nu: int, n: int) -> RingElement:
    # Per-component factor of the factored display, with the symbol power
    # e^n folded in so exponents stay nonnegative:
    #   sum_l (-1)^l binom(nu-1, l) e^(n-l) L^(-l)      (nu >= 1)
    #   sum_l e^(n-l) L^(-l)                            (nu = 0)
    total = RingElement.zero()
    if nu >= 1:
        for l in range(min(n, nu - 1) + 1):
            sign = -1 if l % 2 else 1
            total = total + (
                RingElement.integer(sign * comb(nu - 1, l))
                * e ** (n - l)
            ).lefschetz_shift(-l)
    else:
        for l in range(n + 1):
            total = total + (e ** (n - l)).lefschetz_shift(-l)
    return total


# ---------------------------------------------------------------------------
# stratum enumeration
# ---------------------------------------------------------------------------


def _subsets(items):
    for mask in range(1 << len(items)):
        yield tuple(items[k] for k in range(len(items)) if mask >> k & 1)


def _scan_strata(g: ResolutionGraph, bound, mode: str, strictness: str):
    """All strata whose exponent vector fits under ``bound``, in a fixed order.

    Returns ``(strata, skipped)`` where ``skipped`` counts the strata dropped
    in ``integral`` mode for having a non-integral valuation or exponent
    vector.  Termination relies on every entry of ``M`` being strictly
    positive, which holds because the graph is connected: raising any
    multiplicity strictly raises every valuation coordinate.
    """
    if mode not in ("full", "divisorial"):
        raise ValueError(f"unknown mode {mode!r}")
    if strictness not in ("literal", "integral"):
        raise ValueError(f"unknown strictness {strictness!r}")
    arity = g.r if mode == "full" else g.s
    if mode == "full" and g.r < 1:
        raise ValueError("branch-variable enumeration needs at least one branch")
    bound = tuple(Fraction(b) for b in bound)
    if len(bound) != arity:
        raise ValueError(f"bound arity {len(bound)} does not match {arity} variables")
    if any(b < 0 for b in bound):
        raise ValueError("bounds must be nonnegative")

    s = g.s
    m = g.m_matrix
    pairs0 = [site.key for site in g.pairs]
    branch_attach = [g.branch(j).attach for j in range(1, g.r + 1)]
    branch_weight = [g.degree_of(a) for a in branch_attach]

    strata: list[Stratum] = []
    skipped = 0

    for pair_subset in _subsets(pairs0):
        branch_subsets = _subsets(list(range(1, g.r + 1))) if mode == "full" else ((),)
        for branch_subset in branch_subsets:
            # Independent variables, in canonical order.  Each entry is
            # (nhat index or None, minimum value, role).
            variables: list[tuple[int | None, int, tuple]] = []
            for i in range(1, s + 1):
                variables.append((i - 1, 0, ("n", i)))
            for k, (i1, i2) in enumerate(pair_subset):
                variables.append((i1 - 1, 1, ("p1", k)))
                variables.append((i2 - 1, 1, ("p2", k)))
            for k, j in enumerate(branch_subset):
                variables.append((branch_attach[j - 1] - 1, 1, ("b1", k)))
                variables.append((None, 1, ("b2", k, j)))

            values = [v_min for _, v_min, _ in variables]

            def exponent_now():
                nh = [0] * s
                second = {}
                for (idx, _, role), val in zip(variables, values):
                    if idx is not None:
                        nh[idx] += val
                    else:
                        second[role[2]] = val
                w = vec_mat(nh, m)
                if mode == "divisorial":
                    return nh, w, w
                v = tuple(
                    w[branch_attach[j - 1] - 1]
                    + second.get(j, 0) * branch_weight[j - 1]
                    for j in range(1, g.r + 1)
                )
                return nh, w, v

            def emit():
                nonlocal skipped
                nh, w, exp = exponent_now()
                if strictness == "integral" and not (
                    all(Fraction(x).denominator == 1 for x in w)
                    and all(Fraction(x).denominator == 1 for x in exp)
                ):
                    skipped += 1
                    return
                point_mults = tuple(values[i] for i in range(s))
                pair_mults = []
                branch_mults = []
                offset = s
                for k in range(len(pair_subset)):
                    pair_mults.append((values[offset], values[offset + 1]))
                    offset += 2
                for k in range(len(branch_subset)):
                    branch_mults.append((values[offset], values[offset + 1]))
                    offset += 2
                strata.append(
                    Stratum(
                        pairs=pair_subset,
                        branches=branch_subset,
                        point_mults=point_mults,
                        pair_mults=tuple(pair_mults),
                        branch_mults=tuple(branch_mults),
                    )
                )

            def rec(k: int):
                if k == len(variables):
                    emit()
                    return
                _, v_min, _ = variables[k]
                value = v_min
                while True:
                    values[k] = value
                    _, _, exp = exponent_now()
                    if not all(e <= b for e, b in zip(exp, bound)):
                        break
                    if k == len(variables) - 1:
                        emit()
                    else:
                        rec(k + 1)
                    value += 1
                values[k] = v_min

            # Feasibility of the all-minimum assignment gates the whole family.
            _, _, exp0 = exponent_now()
            if all(e <= b for e, b in zip(exp0, bound)):
                if variables:
                    rec(0)
                else:  # pragma: no cover - s >= 1 always yields variables
                    emit()
    return strata, skipped


def enumerate_strata(g: ResolutionGraph, bound, mode: str = "full", strictness: str = "literal"):
    """Every stratum whose exponent vector is coordinatewise at most ``bound``."""
    strata, _skipped = _scan_strata(g, bound, mode, strictness)
    yield from strata


# ---------------------------------------------------------------------------
# series assembly
# ---------------------------------------------------------------------------


def _mapreduce(arity, bound, strata, skipped, term_fn, workers: int) -> TruncatedSeries:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(term_fn, strata))
    else:
        results = [term_fn(st) for st in strata]
    series = TruncatedSeries.zero(arity, bound)
    for exp, value in results:
        series.add_term(exp, value)
    series.skipped_nonintegral = skipped
    return series


def _units_product(g: ResolutionGraph, st: Stratum) -> RingElement:
    table = g.symbol_table
    out = RingElement.one()
    for i1, i2 in st.pairs:
        out = out * table.units_class(g.pair_label(g.pair_site(i1, i2)))
    for j in st.branches:
        out = out * table.units_class(g.branch_label(j))
    return out


def poincare_generalised(
    g: ResolutionGraph,
    bound,
    *,
    strictness: str = "literal",
    workers: int = 1,
) -> TruncatedSeries:
    """The branch series, truncated coordinatewise at ``bound``.

    Both the direct stratum sum ``sum L^(-F) [Y] t^v`` and the factored
    display are evaluated; a mismatch raises ``SeriesCrossCheckError``.
    """
    if g.r < 1:
        raise ValueError("the branch series needs at least one branch")
    strata, skipped = _scan_strata(g, bound, "full", strictness)

    def fubini_term(st: Stratum):
        exp = v_of(st, g)
        value = stratum_class(st, g, "circ").lefschetz_shift(-codim_F(st, g))
        return exp, value

    def factored_term(st: Stratum):
        exp = v_of(st, g)
        shift = sum(st.point_mults) - codim_F_literal(st, g)
        value = _units_product(g, st)
        for i in range(1, g.s + 1):
            n_i = st.point_mults[i - 1]
            if n_i:
                e = g.symbol_table.class_of(g.component_label(i))
                value = value * _display_inner_factor(e, g.nu_circ[i - 1], n_i)
        return exp, value.lefschetz_shift(shift)

    direct = _mapreduce(g.r, bound, strata, skipped, fubini_term, workers)
    factored = _mapreduce(g.r, bound, strata, skipped, factored_term, workers)
    if direct != factored:
        raise SeriesCrossCheckError(
            "branch series: stratum sum and factored display disagree"
        )
    return direct


def poincare_divisorial(
    g: ResolutionGraph,
    bound,
    *,
    strictness: str = "literal",
    workers: int = 1,
) -> TruncatedSeries:
    """The divisorial series, truncated coordinatewise at ``bound``."""
    strata, skipped = _scan_strata(g, bound, "divisorial", strictness)

    def fubini_term(st: Stratum):
        exp = w_of(nhat(st, g), g)
        value = stratum_class(st, g, "bullet").lefschetz_shift(-codim_FD(st, g))
        return exp, value

    def factored_term(st: Stratum):
        exp = w_of(nhat(st, g), g)
        shift = sum(st.point_mults) - codim_F_literal(st, g)
        value = _units_product(g, st)
        for i in range(1, g.s + 1):
            n_i = st.point_mults[i - 1]
            if n_i:
                e = g.symbol_table.class_of(g.component_label(i))
                value = value * _display_inner_factor(e, g.nu_bullet[i - 1], n_i)
        return exp, value.lefschetz_shift(shift)

    direct = _mapreduce(g.s, bound, strata, skipped, fubini_term, workers)
    factored = _mapreduce(g.s, bound, strata, skipped, factored_term, workers)
    if direct != factored:
        raise SeriesCrossCheckError(
            "divisorial series: stratum sum and factored display disagree"
        )
    return direct


def divisorial_semigroup_stratum_sum(
    g: ResolutionGraph,
    bound,
    *,
    strictness: str = "literal",
    workers: int = 1,
) -> TruncatedSeries:
    """Direct sum ``sum [Y^D] t^w`` over divisorial strata, no codimension factor.

    This is the stratum-level description of the extended-semigroup series;
    it must reproduce ``expand(divisorial_closed_form(g), bound)`` exactly.
    """
    strata, skipped = _scan_strata(g, bound, "divisorial", strictness)

    def term(st: Stratum):
        return w_of(nhat(st, g), g), stratum_class(st, g, "bullet")

    return _mapreduce(g.s, bound, strata, skipped, term, workers)


# ---------------------------------------------------------------------------
# the closed form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormExpr:
    """Rational closed form of the extended-semigroup series.

    ``denominator``: one pair of factors ``(1 - t^{m_i}) (1 - e_i L t^{m_i})``
    per component.  ``numerator``: one factor per intersection pair,

        ``D^h + D^(h-1) * (e L - 1) * t^{m_{i1}} * t^{m_{i2}}``

    with ``D = (1 - t^{m_{i1}})(1 - t^{m_{i2}})``, ``h`` the pair degree and
    ``e`` the pair's field symbol.
    """

    arity: int
    m_rows: tuple[ExponentVector, ...]
    component_classes: tuple[RingElement, ...]  # e_i, per component
    pair_data: tuple[tuple[int, int, int, RingElement], ...]  # (i1, i2, h, eL-1)

    @property
    def has_integral_exponents(self) -> bool:
        return all(row.is_integral for row in self.m_rows)

    def to_text(self) -> str:
        num_parts = []
        for i1, i2, h, units in self.pair_data:
            a = monomial_text(self.m_rows[i1 - 1])
            b = monomial_text(self.m_rows[i2 - 1])
            ab = monomial_text(self.m_rows[i1 - 1] + self.m_rows[i2 - 1])
            d = f"(1 - {a})*(1 - {b})"
            if h == 1:
                num_parts.append(f"({d} + ({units.to_text()})*{ab})")
            else:
                lead = f"({d})^{h}"
                rest = f"({d})" if h == 2 else f"({d})^{h - 1}"
                num_parts.append(f"({lead} + {rest}*({units.to_text()})*{ab})")
        num = "*".join(num_parts) if num_parts else "1"
        den_parts = []
        for i in range(self.arity):
            a = monomial_text(self.m_rows[i])
            e = self.component_classes[i]
            ratio = "L" if e.is_one else f"{e.to_text()}*L"
            den_parts.append(f"(1 - {a})*(1 - {ratio}*{a})")
        return f"{num} / ({'*'.join(den_parts)})"

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "m_rows": [[_frac_json(x) for x in row] for row in self.m_rows],
            "components": [e.to_json() for e in self.component_classes],
            "pairs": [
                {"i1": i1, "i2": i2, "h_sigma": h, "units": units.to_json()}
                for i1, i2, h, units in self.pair_data
            ],
        }


def divisorial_closed_form(g: ResolutionGraph) -> ClosedFormExpr:
    rows = tuple(ExponentVector(row) for row in g.m_matrix)
    for row in rows:
        if any(x <= 0 for x in row):
            raise ValueError("valuation matrix must be entrywise positive")
    table = g.symbol_table
    classes = tuple(table.class_of(g.component_label(i)) for i in range(1, g.s + 1))
    pair_data = tuple(
        (site.i1, site.i2, site.degree, table.units_class(g.pair_label(site)))
        for site in g.pairs
    )
    return ClosedFormExpr(
        arity=g.s, m_rows=rows, component_classes=classes, pair_data=pair_data
    )


def _monomial_series(arity, bound, exp: ExponentVector, value=None) -> TruncatedSeries:
    series = TruncatedSeries.zero(arity, bound)
    series.add_term(exp, RingElement.one() if value is None else value)
    return series


def _geometric_series(arity, bound, step: ExponentVector, ratio: RingElement) -> TruncatedSeries:
    """``sum_k ratio^k t^(k * step)`` truncated at ``bound``."""
    if all(x == 0 for x in step):
        raise ValueError("geometric expansion needs a nonzero exponent step")
    series = TruncatedSeries.zero(arity, bound)
    bound = series.bound
    k = 0
    power = RingElement.one()
    while True:
        exp = ExponentVector(k * x for x in step)
        if not exp.leq(bound):
            break
        series.add_term(exp, power)
        power = power * ratio
        k += 1
    return series


def expand(cf: ClosedFormExpr, bound) -> TruncatedSeries:
    """Exact truncated expansion of the closed form.

    The numerator is a finite polynomial multiplication; each denominator
    factor expands by a geometric series, ``(1 - e L t^m)^{-1}`` with ratio
    ``e L``.  Exponents live on the rational lattice spanned by the rows of
    ``M``.
    """
    arity = cf.arity
    series = TruncatedSeries.one(arity, bound)
    bound = series.bound
    zero = ExponentVector((0,) * arity)
    for i1, i2, h, units in cf.pair_data:
        a = cf.m_rows[i1 - 1]
        b = cf.m_rows[i2 - 1]
        d = TruncatedSeries.zero(arity, bound)
        d.add_term(zero, RingElement.one())
        d.add_term(a, -RingElement.one())
        d.add_term(b, -RingElement.one())
        d.add_term(a + b, RingElement.one())
        factor = d.power(h) + d.power(h - 1).mul(
            _monomial_series(arity, bound, a + b, units)
        )
        series = series.mul(factor)
    one = RingElement.one()
    lef = RingElement.lefschetz()
    for i in range(arity):
        step = cf.m_rows[i]
        series = series.mul(_geometric_series(arity, bound, step, one))
        series = series.mul(
            _geometric_series(arity, bound, step, cf.component_classes[i] * lef)
        )
    return series


def expand_totally_rational(g: ResolutionGraph, bound) -> TruncatedSeries:
    """Independent expansion of the all-degrees-one closed form.

    Numerator factors are ``1 - t^{m_{i1}} - t^{m_{i2}} + L t^{m_{i1}}
    t^{m_{i2}}``; the denominator is ``prod (1 - t^{m_i})(1 - L t^{m_i})``.
    """
    if not g.is_totally_rational:
        raise ValueError("this reduction requires all extension degrees to be 1")
    arity = g.s
    rows = tuple(ExponentVector(row) for row in g.m_matrix)
    series = TruncatedSeries.one(arity, bound)
    bound = series.bound
    zero = ExponentVector((0,) * arity)
    lef = RingElement.lefschetz()
    for site in g.pairs:
        a = rows[site.i1 - 1]
        b = rows[site.i2 - 1]
        factor = TruncatedSeries.zero(arity, bound)
        factor.add_term(zero, RingElement.one())
        factor.add_term(a, -RingElement.one())
        factor.add_term(b, -RingElement.one())
        factor.add_term(a + b, lef)
        series = series.mul(factor)
    one = RingElement.one()
    for i in range(arity):
        series = series.mul(_geometric_series(arity, bound, rows[i], one))
        series = series.mul(_geometric_series(arity, bound, rows[i], lef))
    return series


def poincare_generalised_totally_rational(
    g: ResolutionGraph, bound, *, workers: int = 1
) -> TruncatedSeries:
    """Independent implementation of the all-degrees-one branch series.

    Coefficients take the symbol-free shape ``L^(#I + #J + sum n_i - F)
    (1 - L^{-1})^(#I + #J)`` times binomial factors in ``L^{-1}``.
    """
    if not g.is_totally_rational:
        raise ValueError("this reduction requires all extension degrees to be 1")
    if g.r < 1:
        raise ValueError("the branch series needs at least one branch")
    strata, skipped = _scan_strata(g, bound, "full", "literal")
    one = RingElement.one()
    unit_factor = one - RingElement.lefschetz(-1)  # 1 - L^{-1}

    def term(st: Stratum):
        exp = v_of(st, g)
        count = len(st.pairs) + len(st.branches)
        shift = count + sum(st.point_mults) - codim_F(st, g)
        value = unit_factor**count
        for i in range(1, g.s + 1):
            n_i = st.point_mults[i - 1]
            if not n_i:
                continue
            nu = g.nu_circ[i - 1]
            inner = RingElement.zero()
            if nu >= 1:
                for l in range(min(n_i, nu - 1) + 1):
                    sign = -1 if l % 2 else 1
                    inner = inner + RingElement.integer(
                        sign * comb(nu - 1, l)
                    ).lefschetz_shift(-l)
            else:
                for l in range(n_i + 1):
                    inner = inner + RingElement.lefschetz(-l)
            value = value * inner
        return exp, value.lefschetz_shift(shift)

    return _mapreduce(g.r, bound, strata, skipped, term, workers)
