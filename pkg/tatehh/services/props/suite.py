"""Набор тождеств когомологий Тейта, проверяемых на базисных классах по решётке подгрупп.

Каждое тождество сводится к равенству матриц индуцированных отображений или координат классов; при
числе случаев больше бюджета случаи выбираются детерминированно по зерну.
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from typing import Any

import numpy as np

from .constants import IDENTITY_DEGREES, ORDINARY_DEGREE_LIMIT
from .lattice import is_normal, subgroup_lattice
from .sampling import sample_cases
from .types import PropertyFamily, PropertyVerdict
from ..cup import cup
from ..groups import FiniteGroup, Subgroup, double_coset_reps
from ..kgmodules import KGModule, direct_sum, induce, multiplication_pairing, trivial_module
from ..linalg import FpMatrix, kernel_basis, rank
from ..maps import (
    conjugation,
    conjugation_map,
    corestriction,
    corestriction_map,
    identity_map,
    pi_map,
    restriction,
    restriction_map,
    theta_map,
)
from ..resolutions import (
    Backend,
    CohomologyClass,
    CohomologySpace,
    TateWorkspace,
    ordinary_cohomology,
    ordinary_homology,
)
from ..types import Degree, Prime
from ...config import DEFAULT_SEED, SAMPLED_CHECKS

logger = logging.getLogger(__name__)

Case = tuple[Any, ...]


def _describe(item: Any) -> str:
    if isinstance(item, Subgroup):
        return item.describe()
    if isinstance(item, KGModule):
        return item.name
    return str(item)


def _same(a: CohomologyClass, b: CohomologyClass) -> bool:
    return a.space.dim == b.space.dim and bool(np.array_equal(a.coordinates, b.coordinates))


class PropertySuite:
    """Проверка тождеств для res, cor, g*, θ_a*, π_a*, cup-произведения и размерностей.

    Attributes:
        group: Группа G.
        p: Характеристика.
        degrees: Проверяемые степени; произведения берутся, когда сумма степеней тоже в диапазоне.
        workspace: Общие пространства когомологий над одной полной резольвентой.
        lattice: Подгруппы G.
    """

    def __init__(
        self,
        group: FiniteGroup,
        p: Prime,
        degrees: range = IDENTITY_DEGREES,
        backend: Backend = Backend.AUTO,
        seed: int = DEFAULT_SEED,
        budget: int | None = SAMPLED_CHECKS,
    ):
        self.group = group
        self.p = p
        self.degrees = degrees
        self.workspace = TateWorkspace(group, p, (degrees.start - 1, degrees.stop), backend)
        self.pairing = multiplication_pairing(group, p)
        self.lattice = subgroup_lattice(group)
        self._rng = np.random.default_rng(seed)
        self._budget = budget

    @property
    def whole(self) -> Subgroup:
        return self.group.whole()

    @property
    def trivial(self) -> KGModule:
        return self.workspace.trivial

    @property
    def conj(self) -> KGModule:
        return self.pairing.left

    @property
    def modules(self) -> tuple[KGModule, KGModule]:
        return self.trivial, self.conj

    @property
    def elements(self) -> range:
        return range(self.group.order)

    def run(self, names: Iterable[str] | None = None) -> list[PropertyVerdict]:
        """Метод запуска проверок.

        Args:
            names: Имена проверок (по умолчанию все в порядке CHECKS).

        Returns:
            Вердикты в порядке запуска.
        """
        verdicts = [getattr(self, name)() for name in (names or CHECKS)]
        failed = [verdict.name for verdict in verdicts if not verdict.passed]
        logger.info(f"Property suite on {self.group.name} over F_{self.p}: {len(verdicts)} checks, failed {failed}")
        return verdicts

    # Общие части

    def _space(self, n: Degree, subgroup: Subgroup, module: KGModule | None = None) -> CohomologySpace:
        return self.workspace.space(n, module, subgroup)

    def _basis(self, n: Degree, subgroup: Subgroup) -> range:
        return range(self._space(n, subgroup).dim)

    def _sample(self, cases: Sequence[Case]) -> Sequence[Case]:
        return sample_cases(cases, self._rng, self._budget)

    def _verdict(
        self, name: str, family: PropertyFamily, cases: Sequence[Case], check: Callable[..., bool]
    ) -> PropertyVerdict:
        sampled = self._sample(cases)
        for count, case in enumerate(sampled, start=1):
            if not check(*case):
                detail = f"fails at ({', '.join(_describe(item) for item in case)})"
                logger.warning(f"{name}: {detail}")
                return PropertyVerdict(name, family, False, count, len(cases), detail)
        logger.debug(f"{name}: {len(sampled)} of {len(cases)} cases hold")
        return PropertyVerdict(name, family, True, len(sampled), len(cases))

    def _inclusions(self) -> list[tuple[Subgroup, Subgroup]]:
        return [(k, h) for h in self.lattice for k in self.lattice if k.is_subgroup_of(h)]

    def _chains(self) -> list[tuple[Subgroup, Subgroup, Subgroup]]:
        return [(k, h, l) for k, h in self._inclusions() for l in self.lattice if h.is_subgroup_of(l)]

    def _degree_pairs(self) -> list[tuple[Degree, Degree]]:
        return [(m, n) for m in self.degrees for n in self.degrees if m + n in self.degrees]

    def _centralized(self, *elements: int) -> list[Subgroup]:
        """Подгруппы решётки, стабилизирующие e_a для всех a из elements."""
        group = self.group
        return [v for v in self.lattice if all(group.conj(h, a) == a for a in elements for h in v.members)]

    # Отображения res, cor, g*

    def conjugation_composes(self) -> PropertyVerdict:
        """(g₁g₂)* = g₁*∘g₂*."""
        cases = [
            (n, h, g1, g2) for n in self.degrees for h in self.lattice for g1 in self.elements for g2 in self.elements
        ]

        def check(n: Degree, h: Subgroup, g1: int, g2: int) -> bool:
            space = self._space(n, h)
            second = conjugation_map(space, g2)
            composite = conjugation_map(second.target, g1) @ second
            return composite.matrix == conjugation_map(space, self.group.mul(g1, g2)).matrix

        return self._verdict("conjugation_composes", PropertyFamily.MAPS, cases, check)

    def inner_conjugation_trivial(self) -> PropertyVerdict:
        """g* = 1 при g ∈ H."""
        cases = [(n, h, g) for n in self.degrees for h in self.lattice for g in h.members]

        def check(n: Degree, h: Subgroup, g: int) -> bool:
            space = self._space(n, h)
            return conjugation_map(space, g).matrix == identity_map(space).matrix

        return self._verdict("inner_conjugation_trivial", PropertyFamily.MAPS, cases, check)

    def corestriction_after_restriction(self) -> PropertyVerdict:
        """cor^H_K∘res^H_K = (H : K)."""
        cases = [(n, k, h, module) for n in self.degrees for k, h in self._inclusions() for module in self.modules]

        def check(n: Degree, k: Subgroup, h: Subgroup, module: KGModule) -> bool:
            space = self._space(n, h, module)
            res = restriction_map(space, k)
            cor = corestriction_map(res.target, h)
            return (cor @ res).matrix == identity_map(space).scale(k.index_in(h)).matrix

        return self._verdict("corestriction_after_restriction", PropertyFamily.MAPS, cases, check)

    def restriction_transitive(self) -> PropertyVerdict:
        cases = [(n, k, h, l, module) for n in self.degrees for k, h, l in self._chains() for module in self.modules]

        def check(n: Degree, k: Subgroup, h: Subgroup, l: Subgroup, module: KGModule) -> bool:
            space = self._space(n, l, module)
            first = restriction_map(space, h)
            return (restriction_map(first.target, k) @ first).matrix == restriction_map(space, k).matrix

        return self._verdict("restriction_transitive", PropertyFamily.MAPS, cases, check)

    def corestriction_transitive(self) -> PropertyVerdict:
        cases = [(n, k, h, l, module) for n in self.degrees for k, h, l in self._chains() for module in self.modules]

        def check(n: Degree, k: Subgroup, h: Subgroup, l: Subgroup, module: KGModule) -> bool:
            space = self._space(n, k, module)
            first = corestriction_map(space, h)
            return (corestriction_map(first.target, l) @ first).matrix == corestriction_map(space, l).matrix

        return self._verdict("corestriction_transitive", PropertyFamily.MAPS, cases, check)

    def conjugation_restriction(self) -> PropertyVerdict:
        """g*∘res^H_K = res^{gH}_{gK}∘g*."""
        cases = [
            (n, k, h, g, module)
            for n in self.degrees
            for k, h in self._inclusions()
            for g in self.elements
            for module in self.modules
        ]

        def check(n: Degree, k: Subgroup, h: Subgroup, g: int, module: KGModule) -> bool:
            space = self._space(n, h, module)
            res = restriction_map(space, k)
            conj = conjugation_map(space, g)
            left = conjugation_map(res.target, g) @ res
            right = restriction_map(conj.target, k.conjugate(g)) @ conj
            return left.matrix == right.matrix

        return self._verdict("conjugation_restriction", PropertyFamily.MAPS, cases, check)

    def conjugation_corestriction(self) -> PropertyVerdict:
        """g*∘cor^H_K = cor^{gH}_{gK}∘g*."""
        cases = [
            (n, k, h, g, module)
            for n in self.degrees
            for k, h in self._inclusions()
            for g in self.elements
            for module in self.modules
        ]

        def check(n: Degree, k: Subgroup, h: Subgroup, g: int, module: KGModule) -> bool:
            space = self._space(n, k, module)
            cor = corestriction_map(space, h)
            conj = conjugation_map(space, g)
            left = conjugation_map(cor.target, g) @ cor
            right = corestriction_map(conj.target, h.conjugate(g)) @ conj
            return left.matrix == right.matrix

        return self._verdict("conjugation_corestriction", PropertyFamily.MAPS, cases, check)

    def mackey_formula(self) -> PropertyVerdict:
        """res^G_K∘cor^G_H = Σ_x cor^K_{K∩xH}∘res^{xH}_{K∩xH}∘x* по двойным классам K\\G/H."""
        cases = [
            (n, h, k, i)
            for n in self.degrees
            for h in self.lattice
            for k in self.lattice
            for i in self._basis(n, h)
        ]

        def check(n: Degree, h: Subgroup, k: Subgroup, i: int) -> bool:
            beta = self._space(n, h).basis_class(i)
            left = restriction(corestriction(beta, self.whole), k)
            total = np.zeros(left.space.dim, dtype=np.int64)
            for x in double_coset_reps(k, h):
                moved = conjugation(x, beta)
                meet = k.intersect(h.conjugate(x))
                total += corestriction(restriction(moved, meet), k).coordinates
            return bool(np.array_equal(np.mod(total, self.p), left.coordinates))

        return self._verdict("mackey_formula", PropertyFamily.MAPS, cases, check)

    # Произведения

    def restriction_multiplicative(self) -> PropertyVerdict:
        cases = [
            (m, n, h, i, j)
            for m, n in self._degree_pairs()
            for h in self.lattice
            for i in self._basis(m, self.whole)
            for j in self._basis(n, self.whole)
        ]

        def check(m: Degree, n: Degree, h: Subgroup, i: int, j: int) -> bool:
            a = self._space(m, self.whole).basis_class(i)
            b = self._space(n, self.whole).basis_class(j)
            return _same(restriction(cup(a, b), h), cup(restriction(a, h), restriction(b, h)))

        return self._verdict("restriction_multiplicative", PropertyFamily.PRODUCTS, cases, check)

    def frobenius_left(self) -> PropertyVerdict:
        """cor(β ⌣ res α) = cor β ⌣ α."""
        cases = [
            (m, n, h, i, j)
            for m, n in self._degree_pairs()
            for h in self.lattice
            for i in self._basis(m, h)
            for j in self._basis(n, self.whole)
        ]

        def check(m: Degree, n: Degree, h: Subgroup, i: int, j: int) -> bool:
            beta = self._space(m, h).basis_class(i)
            alpha = self._space(n, self.whole).basis_class(j)
            left = corestriction(cup(beta, restriction(alpha, h)), self.whole)
            return _same(left, cup(corestriction(beta, self.whole), alpha))

        return self._verdict("frobenius_left", PropertyFamily.PRODUCTS, cases, check)

    def frobenius_right(self) -> PropertyVerdict:
        """cor(res α ⌣ β) = α ⌣ cor β."""
        cases = [
            (m, n, h, i, j)
            for m, n in self._degree_pairs()
            for h in self.lattice
            for i in self._basis(m, self.whole)
            for j in self._basis(n, h)
        ]

        def check(m: Degree, n: Degree, h: Subgroup, i: int, j: int) -> bool:
            alpha = self._space(m, self.whole).basis_class(i)
            beta = self._space(n, h).basis_class(j)
            left = corestriction(cup(restriction(alpha, h), beta), self.whole)
            return _same(left, cup(alpha, corestriction(beta, self.whole)))

        return self._verdict("frobenius_right", PropertyFamily.PRODUCTS, cases, check)

    def conjugation_multiplicative(self) -> PropertyVerdict:
        cases = [
            (m, n, h, g, i, j)
            for m, n in self._degree_pairs()
            for h in self.lattice
            for g in self.elements
            for i in self._basis(m, h)
            for j in self._basis(n, h)
        ]

        def check(m: Degree, n: Degree, h: Subgroup, g: int, i: int, j: int) -> bool:
            a = self._space(m, h).basis_class(i)
            b = self._space(n, h).basis_class(j)
            return _same(conjugation(g, cup(a, b)), cup(conjugation(g, a), conjugation(g, b)))

        return self._verdict("conjugation_multiplicative", PropertyFamily.PRODUCTS, cases, check)

    def graded_commutativity(self) -> PropertyVerdict:
        """α ⌣ β = (-1)^{mn} β ⌣ α."""
        cases = [
            (m, n, h, i, j)
            for m, n in self._degree_pairs()
            for h in self.lattice
            for i in self._basis(m, h)
            for j in self._basis(n, h)
        ]

        def check(m: Degree, n: Degree, h: Subgroup, i: int, j: int) -> bool:
            a = self._space(m, h).basis_class(i)
            b = self._space(n, h).basis_class(j)
            return _same(cup(a, b), cup(b, a).scale((-1) ** (m * n)))

        return self._verdict("graded_commutativity", PropertyFamily.PRODUCTS, cases, check)

    def odd_squares_vanish(self) -> PropertyVerdict:
        """α² = 0 для α нечётной степени при p ≠ 2."""
        cases = []
        if self.p != 2:
            cases = [
                (n, h, i)
                for n in self.degrees
                if n % 2 and 2 * n in self.degrees
                for h in self.lattice
                for i in self._basis(n, h)
            ]

        def check(n: Degree, h: Subgroup, i: int) -> bool:
            a = self._space(n, h).basis_class(i)
            return cup(a, a).is_zero()

        return self._verdict("odd_squares_vanish", PropertyFamily.PRODUCTS, cases, check)

    # θ_a* и π_a* с коэффициентами в kG

    def theta_conjugation(self) -> PropertyVerdict:
        """h*∘θ_a* = θ_{ha}*∘h*."""
        cases = [
            (n, a, v, h)
            for n in self.degrees
            for a in self.elements
            for v in self._centralized(a)
            for h in self.elements
        ]

        def check(n: Degree, a: int, v: Subgroup, h: int) -> bool:
            space = self._space(n, v)
            theta = theta_map(space, a, self.conj)
            conj = conjugation_map(space, h)
            left = conjugation_map(theta.target, h) @ theta
            right = theta_map(conj.target, self.group.conj(h, a), self.conj) @ conj
            return left.matrix == right.matrix

        return self._verdict("theta_conjugation", PropertyFamily.COEFFICIENTS, cases, check)

    def theta_multiplicative(self) -> PropertyVerdict:
        """θ_a*(α) ⌣ θ_b*(β) = θ_{ab}*(α ⌣ β)."""
        cases = [
            (m, n, a, b, v, i, j)
            for m, n in self._degree_pairs()
            for a in self.elements
            for b in self.elements
            for v in self._centralized(a, b)
            for i in self._basis(m, v)
            for j in self._basis(n, v)
        ]

        def check(m: Degree, n: Degree, a: int, b: int, v: Subgroup, i: int, j: int) -> bool:
            alpha = self._space(m, v).basis_class(i)
            beta = self._space(n, v).basis_class(j)
            left = cup(
                theta_map(alpha.space, a, self.conj).apply(alpha),
                theta_map(beta.space, b, self.conj).apply(beta),
                self.pairing,
            )
            product = cup(alpha, beta)
            right = theta_map(product.space, self.group.mul(a, b), self.conj).apply(product)
            return _same(left, right)

        return self._verdict("theta_multiplicative", PropertyFamily.COEFFICIENTS, cases, check)

    def theta_pi_commute_with_transfer(self) -> PropertyVerdict:
        """θ_a* и π_a* перестановочны с res^V_{V'} и cor^V_{V'}."""
        cases = [
            (n, a, w, v)
            for n in self.degrees
            for a in self.elements
            for v in self._centralized(a)
            for w in self.lattice
            if w.is_subgroup_of(v)
        ]

        def check(n: Degree, a: int, w: Subgroup, v: Subgroup) -> bool:
            upper, lower = self._space(n, v), self._space(n, w)
            upper_kg, lower_kg = self._space(n, v, self.conj), self._space(n, w, self.conj)
            theta, local_theta = theta_map(upper, a, self.conj), theta_map(lower, a, self.conj)
            pi, local_pi = pi_map(upper_kg, a, self.trivial), pi_map(lower_kg, a, self.trivial)
            res, local_cor = restriction_map(upper, w), corestriction_map(lower, v)
            pairs = (
                (restriction_map(theta.target, w) @ theta, theta_map(res.target, a, self.conj) @ res),
                (corestriction_map(local_theta.target, v) @ local_theta, theta @ local_cor),
                (restriction_map(pi.target, w) @ pi, local_pi @ restriction_map(upper_kg, w)),
                (corestriction_map(local_pi.target, v) @ local_pi, pi @ corestriction_map(lower_kg, v)),
            )
            return all(left.matrix == right.matrix for left, right in pairs)

        return self._verdict("theta_pi_commute_with_transfer", PropertyFamily.COEFFICIENTS, cases, check)

    def pi_after_theta(self) -> PropertyVerdict:
        """π_a*∘θ_b* = δ_ab."""
        cases = [
            (n, a, b, v)
            for n in self.degrees
            for a in self.elements
            for b in self.elements
            for v in self._centralized(a, b)
        ]

        def check(n: Degree, a: int, b: int, v: Subgroup) -> bool:
            space = self._space(n, v)
            theta = theta_map(space, b, self.conj)
            composite = pi_map(theta.target, a, self.trivial) @ theta
            return composite.matrix == identity_map(space).scale(int(a == b)).matrix

        return self._verdict("pi_after_theta", PropertyFamily.COEFFICIENTS, cases, check)

    # Размерности и структура

    def agrees_with_ordinary_cohomology(self) -> PropertyVerdict:
        """Ĥⁿ = Hⁿ при n ≥ 1."""
        cases = [(n,) for n in range(1, min(self.degrees.stop, ORDINARY_DEGREE_LIMIT + 1))]

        def check(n: Degree) -> bool:
            return ordinary_cohomology(self.trivial, n) == self.workspace.dimension(n)

        return self._verdict("agrees_with_ordinary_cohomology", PropertyFamily.STRUCTURE, cases, check)

    def negative_degrees_are_homology(self) -> PropertyVerdict:
        """Ĥⁿ = H_{-(n+1)} при n ≤ -2."""
        cases = [(n,) for n in self.degrees if n <= -2]

        def check(n: Degree) -> bool:
            return ordinary_homology(self.trivial, -(n + 1)) == self.workspace.dimension(n)

        return self._verdict("negative_degrees_are_homology", PropertyFamily.STRUCTURE, cases, check)

    def additivity(self) -> PropertyVerdict:
        """Ĥⁿ(G, k ⊕ kG) = Ĥⁿ(G, k) ⊕ Ĥⁿ(G, kG)."""
        total = direct_sum(self.trivial, self.conj)
        cases = [(n,) for n in self.degrees]

        def check(n: Degree) -> bool:
            expected = self.workspace.dimension(n) + self.workspace.dimension(n, self.conj)
            return self.workspace.dimension(n, total) == expected

        return self._verdict("additivity", PropertyFamily.STRUCTURE, cases, check)

    def eckmann_shapiro(self) -> PropertyVerdict:
        """dim Ĥⁿ(G, k↑^G_H) = dim Ĥⁿ(H, k)."""
        cases = [(n, h) for h in self.lattice for n in self.degrees]
        induced: dict[Subgroup, KGModule] = {}

        def check(n: Degree, h: Subgroup) -> bool:
            if h not in induced:
                induced[h] = induce(trivial_module(h.as_group(), self.p), h)
            return self.workspace.dimension(n, induced[h]) == self.workspace.dimension(n, subgroup=h)

        return self._verdict("eckmann_shapiro", PropertyFamily.STRUCTURE, cases, check)

    def restriction_image_is_invariant(self) -> PropertyVerdict:
        """im res^G_H = Ĥⁿ(H, k)^G для нормальной H индекса, взаимно простого с p."""
        cases = [
            (n, h)
            for h in self.lattice
            if is_normal(h) and h.index_in(self.whole) % self.p
            for n in self.degrees
        ]

        def check(n: Degree, h: Subgroup) -> bool:
            res = restriction_map(self._space(n, self.whole), h)
            if res.target.dim == 0:
                return True
            identity = identity_map(res.target).matrix
            differences = [(conjugation_map(res.target, g).matrix - identity).data for g in self.elements]
            fixed = kernel_basis(FpMatrix(self.p, np.vstack(differences)))
            return rank(res.matrix) == fixed.cols and all(
                (FpMatrix(self.p, difference) @ res.matrix).is_zero() for difference in differences
            )

        return self._verdict("restriction_image_is_invariant", PropertyFamily.STRUCTURE, cases, check)


CHECKS: tuple[str, ...] = (
    "conjugation_composes",
    "inner_conjugation_trivial",
    "corestriction_after_restriction",
    "restriction_transitive",
    "corestriction_transitive",
    "conjugation_restriction",
    "conjugation_corestriction",
    "restriction_multiplicative",
    "frobenius_left",
    "frobenius_right",
    "conjugation_multiplicative",
    "mackey_formula",
    "theta_conjugation",
    "theta_multiplicative",
    "theta_pi_commute_with_transfer",
    "pi_after_theta",
    "agrees_with_ordinary_cohomology",
    "negative_degrees_are_homology",
    "additivity",
    "eckmann_shapiro",
    "graded_commutativity",
    "odd_squares_vanish",
    "restriction_image_is_invariant",
)


def run_property_suite(
    group: FiniteGroup,
    p: Prime,
    degrees: range = IDENTITY_DEGREES,
    backend: Backend = Backend.AUTO,
    seed: int = DEFAULT_SEED,
) -> list[PropertyVerdict]:
    return PropertySuite(group, p, degrees, backend, seed).run()
