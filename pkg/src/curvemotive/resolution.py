"""Combinatorics of an embedded resolution of a plane curve singularity.

The input is purely combinatorial: ``s`` blowup centers listed in birth
order, each recording the set of earlier centers it is proximate to and the
degree ``h_i`` of its residue-field extension over the base field, plus the
curve branches, each attached to the exceptional component its strict
transform meets.  From that the module derives

* the proximity matrix ``P`` (upper unitriangular, ``-1`` at (i, j) when
  center j is proximate to center i),
* ``Delta = diag(h_1, ..., h_s)`` and the intersection matrix
  ``N = -P Delta P^t``,
* the exact rational matrix ``M = -N^{-1}`` whose rows are curvette value
  vectors,
* the intersection pairs ``I0`` with their point degrees ``h_sigma``, the
  neighbor counts ``nu_bullet`` / ``nu_circ``, and ``epsilon_i = 2 h_i -
  nu_bullet_i``.

Construction validates the classical proximity constraints (earlier indices
only, divisibility of residue degrees along infinitely near points, branch
attachments) and raises ``GraphValidationError`` carrying every violation.
Softer diagnostics (a center proximate to more than two points, intersection
degrees that cannot come from a single transversal point, ...) are collected
as warnings on the built graph instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import _linalg
from .grothendieck import SymbolTable

Pair = tuple[int, int]


@dataclass(frozen=True)
class Center:
    proximate_to: tuple[int, ...]
    degree: int = 1


@dataclass(frozen=True)
class Branch:
    attach: int
    degree: int = 1


@dataclass(frozen=True)
class PairSite:
    """An unordered intersection pair sigma = (i1, i2) with its point degree."""

    i1: int
    i2: int
    degree: int  # h_sigma, derived as N[i1][i2] unless overridden

    @property
    def key(self) -> Pair:
        return (self.i1, self.i2)


class GraphValidationError(ValueError):
    """Raised when the combinatorial input violates a hard invariant."""

    def __init__(self, issues):
        self.issues = tuple(issues)
        super().__init__("; ".join(self.issues))


def site_component(i: int) -> str:
    return f"E{i}"


def site_pair(i1: int, i2: int) -> str:
    return f"P({i1},{i2})"


def site_branch(j: int) -> str:
    return f"C{j}"


@dataclass(frozen=True)
class ResolutionGraph:
    """Validated resolution combinatorics plus derived matrices.

    All data is immutable after construction; every derived attribute is a
    pure function of the input, cached on first access.
    """

    centers: tuple[Center, ...]
    branches: tuple[Branch, ...] = ()
    labels: tuple[tuple[str, str], ...] = ()  # (site key, field label)
    h_sigma_overrides: tuple[tuple[Pair, int], ...] = ()

    def __post_init__(self):
        issues = _validate_input(self.centers, self.branches)
        if issues:
            raise GraphValidationError(issues)
        issues = self._validate_derived()
        if issues:
            raise GraphValidationError(issues)

    # -- sizes -------------------------------------------------------------

    @property
    def s(self) -> int:
        return len(self.centers)

    @property
    def r(self) -> int:
        return len(self.branches)

    def degree_of(self, i: int) -> int:
        return self.centers[i - 1].degree

    def branch(self, j: int) -> Branch:
        return self.branches[j - 1]

    # -- matrices ----------------------------------------------------------

    @cached_property
    def proximity_matrix(self):
        s = self.s
        p = [[0] * s for _ in range(s)]
        for j in range(1, s + 1):
            p[j - 1][j - 1] = 1
            for i in self.centers[j - 1].proximate_to:
                p[i - 1][j - 1] = -1
        return _linalg.mat(p)

    @cached_property
    def delta(self):
        return tuple(
            tuple(self.centers[i].degree if i == j else 0 for j in range(self.s))
            for i in range(self.s)
        )

    @cached_property
    def intersection_matrix(self):
        p = self.proximity_matrix
        return _linalg.neg(
            _linalg.mat_mul(_linalg.mat_mul(p, self.delta), _linalg.transpose(p))
        )

    @cached_property
    def m_matrix(self):
        # M = -N^{-1}; -N is positive definite, so no pivoting trouble.
        return _linalg.inverse(_linalg.neg(self.intersection_matrix))

    def m_row(self, i: int):
        return self.m_matrix[i - 1]

    # -- intersection pairs and neighbor counts ------------------------------

    @cached_property
    def pairs(self) -> tuple[PairSite, ...]:
        n = self.intersection_matrix
        overrides = dict(self.h_sigma_overrides)
        out = []
        for i1 in range(1, self.s + 1):
            for i2 in range(i1 + 1, self.s + 1):
                deg = n[i1 - 1][i2 - 1]
                if deg != 0:
                    out.append(
                        PairSite(i1, i2, overrides.get((i1, i2), deg))
                    )
        return tuple(out)

    def pair_site(self, i1: int, i2: int) -> PairSite:
        for site in self.pairs:
            if site.key == (i1, i2):
                return site
        raise KeyError(f"components E{i1} and E{i2} do not intersect")

    @cached_property
    def nu_bullet(self) -> tuple[int, ...]:
        n = self.intersection_matrix
        return tuple(
            sum(n[i][j] for j in range(self.s) if j != i) for i in range(self.s)
        )

    @cached_property
    def beta(self) -> tuple[int, ...]:
        n = self.intersection_matrix
        return tuple(
            sum(1 for j in range(self.s) if j != i and n[i][j] != 0)
            for i in range(self.s)
        )

    def branches_at(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.r + 1) if self.branch(j).attach == i)

    @cached_property
    def nu_circ(self) -> tuple[int, ...]:
        # Branch attachments count with weight h_i, the degree of the
        # component the strict transform meets.
        return tuple(
            self.nu_bullet[i - 1] + self.degree_of(i) * len(self.branches_at(i))
            for i in range(1, self.s + 1)
        )

    @cached_property
    def epsilon(self) -> tuple[int, ...]:
        return tuple(
            2 * self.degree_of(i) - self.nu_bullet[i - 1]
            for i in range(1, self.s + 1)
        )

    # -- field labels --------------------------------------------------------

    @cached_property
    def _label_map(self) -> dict[str, str]:
        return {site: label for site, label in self.labels}

    def _site_label(self, site: str, degree: int) -> str | None:
        explicit = self._label_map.get(site)
        if explicit is not None:
            return None if degree == 1 else explicit
        return None if degree == 1 else site

    def component_label(self, i: int) -> str | None:
        return self._site_label(site_component(i), self.degree_of(i))

    def pair_label(self, site: PairSite) -> str | None:
        return self._site_label(site_pair(site.i1, site.i2), site.degree)

    def branch_label(self, j: int) -> str | None:
        return self._site_label(site_branch(j), self.branch(j).degree)

    @cached_property
    def symbol_table(self) -> SymbolTable:
        degrees: dict[str, int] = {}
        entries = []
        for i in range(1, self.s + 1):
            entries.append((self.component_label(i), self.degree_of(i)))
        for site in self.pairs:
            entries.append((self.pair_label(site), site.degree))
        for j in range(1, self.r + 1):
            entries.append((self.branch_label(j), self.branch(j).degree))
        issues = []
        for label, deg in entries:
            if label is None:
                continue
            if label in degrees and degrees[label] != deg:
                issues.append(
                    f"label {label!r} is shared by sites of degrees "
                    f"{degrees[label]} and {deg}"
                )
            degrees[label] = deg
        if issues:
            raise GraphValidationError(issues)
        return SymbolTable(tuple(degrees.items()))

    # -- diagnostics ---------------------------------------------------------

    @cached_property
    def warnings(self) -> tuple[str, ...]:
        out = []
        for i, center in enumerate(self.centers, start=1):
            if len(center.proximate_to) > 2:
                out.append(
                    f"center {i} is proximate to {len(center.proximate_to)} points; "
                    "free/satellite geometry allows at most 2"
                )
        for i in range(1, self.s + 1):
            expected = self.degree_of(i) * self.beta[i - 1]
            if self.nu_bullet[i - 1] != expected:
                out.append(
                    f"nu_bullet[{i}] = {self.nu_bullet[i - 1]} differs from "
                    f"h_{i}*beta_{i} = {expected}: some intersection point on E{i} "
                    f"has degree other than h_{i}"
                )
        n = self.intersection_matrix
        for site in self.pairs:
            derived = n[site.i1 - 1][site.i2 - 1]
            h1 = self.degree_of(site.i1)
            h2 = self.degree_of(site.i2)
            if derived > h1 and derived > h2:
                out.append(
                    f"pair {site.key}: intersection degree {derived} exceeds both "
                    f"component degrees ({h1}, {h2}); possibly a multi-point "
                    "intersection"
                )
            if site.degree != derived:
                out.append(
                    f"pair {site.key}: h_sigma overridden to {site.degree} "
                    f"(derived value {derived}); cross-form identities may fail"
                )
        return tuple(out)

    def _validate_derived(self):
        issues = []
        n = self.intersection_matrix
        for i in range(self.s):
            for j in range(i + 1, self.s):
                if n[i][j] < 0:
                    issues.append(
                        f"derived intersection number N[{i + 1}][{j + 1}] = {n[i][j]} "
                        "is negative: the proximity data is not realizable"
                    )
        minors = _linalg.leading_principal_minors(_linalg.neg(n))
        if any(m <= 0 for m in minors):
            issues.append("-N is not positive definite")
        known_pairs = {site.key for site in self.pairs}
        for pair, value in self.h_sigma_overrides:
            if pair not in known_pairs:
                issues.append(f"h_sigma override for non-intersecting pair {pair}")
            elif value < 1:
                issues.append(f"h_sigma override for pair {pair} must be positive")
        valid_sites = (
            {site_component(i) for i in range(1, self.s + 1)}
            | {site_pair(p.i1, p.i2) for p in self.pairs}
            | {site_branch(j) for j in range(1, self.r + 1)}
        )
        for site, _label in self.labels:
            if site not in valid_sites:
                issues.append(f"label for unknown site {site!r}")
        if not issues:
            self.symbol_table  # degree-consistency check, raises on conflict
        return issues

    @property
    def is_totally_rational(self) -> bool:
        return (
            all(c.degree == 1 for c in self.centers)
            and all(b.degree == 1 for b in self.branches)
            and all(site.degree == 1 for site in self.pairs)
        )


def _validate_input(centers, branches):
    issues = []
    if not centers:
        issues.append("at least one blowup center is required")
        return issues
    s = len(centers)
    for i, center in enumerate(centers, start=1):
        if center.degree < 1:
            issues.append(f"center {i}: degree must be a positive integer")
        prox = center.proximate_to
        if len(set(prox)) != len(prox):
            issues.append(f"center {i}: repeated proximity indices")
        for ip in prox:
            if not 1 <= ip < i:
                issues.append(
                    f"center {i}: proximity must reference earlier center, got {ip}"
                )
            elif center.degree % centers[ip - 1].degree != 0:
                issues.append(
                    f"center {i}: degree {center.degree} is not divisible by "
                    f"degree {centers[ip - 1].degree} of center {ip}"
                )
        if i >= 2 and not prox:
            issues.append(
                f"center {i}: every center after the first is proximate to at "
                "least one earlier center"
            )
    for j, branch in enumerate(branches, start=1):
        if branch.degree < 1:
            issues.append(f"branch {j}: degree must be a positive integer")
        if not 1 <= branch.attach <= s:
            issues.append(
                f"branch {j}: dangling attachment to component {branch.attach}"
            )
        elif branch.degree % centers[branch.attach - 1].degree != 0:
            issues.append(
                f"branch {j}: degree {branch.degree} is not divisible by degree "
                f"{centers[branch.attach - 1].degree} of component {branch.attach}"
            )
    return issues


_PAIR_KEY = re.compile(r"^\s*\(?\s*(\d+)\s*[,;]\s*(\d+)\s*\)?\s*$")


def _parse_pair(text) -> Pair:
    if isinstance(text, (list, tuple)) and len(text) == 2:
        return (int(text[0]), int(text[1]))
    match = _PAIR_KEY.match(str(text))
    if not match:
        raise GraphValidationError([f"malformed intersection pair {text!r}"])
    return (int(match.group(1)), int(match.group(2)))


def build(description: dict) -> ResolutionGraph:
    """Build and validate a graph from its JSON-shaped description.

    Expected keys: ``centers`` (list of ``{"prox": [...], "h": int}`` in
    blowup order), ``branches`` (list of ``{"attach": int, "h": int}``),
    optional ``labels`` (site key -> field label) and ``h_sigma_overrides``
    (pair key like ``"1,3"`` -> positive integer).
    """
    if not isinstance(description, dict):
        raise GraphValidationError(["graph description must be a JSON object"])
    unknown = set(description) - {"centers", "branches", "labels", "h_sigma_overrides"}
    if unknown:
        raise GraphValidationError([f"unknown top-level keys {sorted(unknown)}"])
    try:
        centers = tuple(
            Center(
                proximate_to=tuple(sorted(int(x) for x in c.get("prox", ()))),
                degree=int(c.get("h", 1)),
            )
            for c in description.get("centers", ())
        )
        branches = tuple(
            Branch(attach=int(b["attach"]), degree=int(b.get("h", 1)))
            for b in description.get("branches", ())
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphValidationError([f"malformed center/branch record: {exc}"]) from exc
    labels = tuple(sorted((str(k), str(v)) for k, v in description.get("labels", {}).items()))
    overrides = tuple(
        sorted(
            (_parse_pair(k), int(v))
            for k, v in description.get("h_sigma_overrides", {}).items()
        )
    )
    return ResolutionGraph(
        centers=centers,
        branches=branches,
        labels=labels,
        h_sigma_overrides=overrides,
    )


def proximity_matrix(g: ResolutionGraph):
    return g.proximity_matrix


def intersection_matrix(g: ResolutionGraph):
    return g.intersection_matrix


def m_matrix(g: ResolutionGraph):
    return g.m_matrix


def matrices_report(g: ResolutionGraph) -> dict:
    """All four matrices with exact entries, JSON-ready."""
    def render(mtx):
        return [[_frac_json(x) for x in row] for row in mtx]

    return {
        "s": g.s,
        "P": render(g.proximity_matrix),
        "Delta": render(g.delta),
        "N": render(g.intersection_matrix),
        "M": render(g.m_matrix),
        "pairs": [
            {"i1": p.i1, "i2": p.i2, "h_sigma": p.degree} for p in g.pairs
        ],
        "nu_bullet": list(g.nu_bullet),
        "nu_circ": list(g.nu_circ),
        "beta": list(g.beta),
        "epsilon": list(g.epsilon),
        "warnings": list(g.warnings),
    }


def _frac_json(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x
