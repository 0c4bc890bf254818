"""
Filename: selftest.py
Author: William Bowley
Version: 2.0
Date: 2026-10-15

Description:
    Acceptance suite behind `sigcocycles selftest`.

    Sizes, genera and word lengths come from selftest.yaml
    (packaged, or --config PATH). Every random draw goes through
    one Lcg64 seeded from --seed, criteria run in a fixed order,
    and reports hold no timings, so the JSON output is identical
    across runs. Timings go to the log.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Optional

from yaml import YAMLError, safe_load

from sigcocycles.bundle.extension import CoeffGroup
from sigcocycles.bundle.monodromy import Monodromy
from sigcocycles.bundle.sampling import (
    level_four_monodromy,
    random_closed_monodromy
)
from sigcocycles.bundle.signature import (
    bundle_signature,
    bundle_signature_lifts,
    evaluate_class
)
from sigcocycles.circle.cochain import (
    NiceCochain,
    from_standard_plus_coboundary,
    standard_cocycle,
    tau1_picture,
    tau1prime_picture
)
from sigcocycles.circle.covering import covering_number
from sigcocycles.circle.dedekind import (
    ClosedFormCocycle,
    calibration_matrix,
    dedekind,
    sign_product,
    sign_sin_pi
)
from sigcocycles.cli.utils import require, scaled
from sigcocycles.congruence.enumeration import (
    Subset,
    closure_bfs,
    is_elementary_abelian,
    is_normal,
    level_two_generators,
    quotient_cosets,
    standard_generators,
    subgroup_filter
)
from sigcocycles.congruence.membership import y_mask
from sigcocycles.congruence.orders import group_order_formula
from sigcocycles.core.matrix import Mat
from sigcocycles.core.symplectic import embed_stabilize
from sigcocycles.core.words import Lcg64, random_symplectic_from
from sigcocycles.domain.constants import DEFAULT_SEED
from sigcocycles.domain.definitions import GroupOrder, MonodromyFamily
from sigcocycles.domain.errors import InvalidInputError
from sigcocycles.domain.library.manager import default_library
from sigcocycles.maslov.index import wall_maslov
from sigcocycles.maslov.lagrangian import (
    Lagrangian,
    default_lagrangian,
    stabilize_lagrangian
)
from sigcocycles.meyer.cocycles import (
    MaslovCocycle,
    MeyerCocycle,
    MeyerGraphCocycle,
    check_cocycle_identity,
    maslov_cocycle,
    meyer_cocycle
)

PACKAGE_LIBRARY = "sigcocycles.library"
CONFIG_FILE = "selftest.yaml"


@dataclass
class CriterionResult:
    name: str
    passed: bool = True
    details: dict[str, Any] = field(default_factory=dict)

    def check(self, condition: bool, failure: str) -> None:
        """Records a failure message (first few only) when false."""
        if condition:
            return
        self.passed = False
        failures = self.details.setdefault("failures", [])
        if len(failures) < 5:
            failures.append(failure)

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, **self.details}


def load_config(path: Optional[str | Path] = None) -> dict[str, Any]:
    """
    Reads the suite configuration.

    Raises:
        InvalidInputError: missing or malformed YAML
    """
    try:
        if path is None:
            text = resources.files(PACKAGE_LIBRARY).joinpath(
                CONFIG_FILE
            ).read_text(encoding="utf-8")
        else:
            text = Path(path).read_text(encoding="utf-8")
        config = safe_load(text)
    except (OSError, YAMLError) as error:
        msg = f"Failed to load self-test configuration: {error}"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}") from error

    if not isinstance(config, dict):
        msg = "Self-test configuration must be a mapping"
        logging.error(msg)
        raise InvalidInputError(f"{__name__}: {msg}")
    return config


def random_rational(rng: Lcg64, max_denominator: int = 24) -> Fraction:
    """Rational in [-3, 3) with a denominator up to max_denominator."""
    q = rng.between(1, max_denominator)
    return Fraction(rng.between(-3 * q, 3 * q - 1), q)


def random_lagrangian(rng: Lcg64, g: int, word_len: int) -> Lagrangian:
    sp = random_symplectic_from(rng, g, word_len)
    return default_lagrangian(g).image(sp)


class SelfTest:
    """
    Runs the acceptance criteria in order and collects a report.
    """
    def __init__(
        self,
        seed: int = DEFAULT_SEED,
        quick: bool = False,
        config: Optional[dict[str, Any]] = None
    ) -> None:
        self.seed = seed
        self.quick = quick
        self.config = load_config() if config is None else config
        self.rng = Lcg64(seed)

        quick_section = require("quick", self.config)
        self.divisor = require("divisor", quick_section) if quick else 1
        self.floor = require("floor", quick_section)
        self.skip_large = quick and require(
            "skip_large_enumeration", quick_section
        )

    def trials(self, count: int) -> int:
        if not self.quick:
            return count
        return scaled(count, self.divisor, self.floor)

    def run(self) -> dict[str, Any]:
        criteria: list[Callable[[], CriterionResult]] = [
            self.calibration,
            self.cocycle_identity,
            self.divisibility_and_dual_oracle,
            self.group_orders,
            self.subgroup_structure,
            self.covering_numbers,
            self.property_suites,
        ]
        results = []
        for criterion in criteria:
            start = time.perf_counter()
            result = criterion()
            logging.info(
                "selftest %s: %s in %.2fs", result.name,
                "passed" if result.passed else "FAILED",
                time.perf_counter() - start,
            )
            results.append(result)

        return {
            "seed": self.seed,
            "quick": self.quick,
            "passed": all(result.passed for result in results),
            "criteria": [result.as_dict() for result in results],
        }

    def calibration(self) -> CriterionResult:
        result = CriterionResult("calibration")
        angles, frozen = default_library().calibration_table()
        expected_angles = [
            Fraction(text)
            for text in require("angles", require("calibration", self.config))
        ]
        result.check(angles == expected_angles, "angle list differs")

        kernel = calibration_matrix(MeyerCocycle())
        graph = calibration_matrix(MeyerGraphCocycle())
        closed = calibration_matrix(ClosedFormCocycle())
        frozen_table = Mat(frozen)

        result.check(kernel == graph, "kernel and graph routes differ")
        result.check(kernel == closed, "closed form differs")
        result.check(kernel == frozen_table, "lock file table is stale")
        result.check(
            all(x in (-2, 0, 2) for x in kernel.entries),
            "values outside {0, 2, -2}",
        )
        result.details["table"] = [
            [int(x) for x in row] for row in kernel.tolist()
        ]
        return result

    def cocycle_identity(self) -> CriterionResult:
        result = CriterionResult("cocycle_identity")
        section = require("cocycle_identity", self.config)
        genera = require("genera", section)
        max_len = require("max_word_length", section)
        trials = self.trials(require("trials", section))

        for trial in range(trials):
            g = genera[trial % len(genera)]
            a, b, c = (
                random_symplectic_from(
                    self.rng, g, self.rng.between(0, max_len)
                )
                for _ in range(3)
            )
            for tau in (meyer_cocycle, maslov_cocycle):
                result.check(
                    check_cocycle_identity(tau, a, b, c),
                    f"{tau.__name__} fails at trial {trial} (g={g})",
                )
        result.details["trials"] = trials
        return result

    def divisibility_and_dual_oracle(self) -> CriterionResult:
        result = CriterionResult("divisibility")
        section = require("divisibility", self.config)
        genera = require("genera", section)
        word_len = require("word_length", section)
        trials = self.trials(require("trials_per_genus", section))
        level_genus = require("level_four_genus", section)
        level_len = require("level_four_word_length", section)
        torsion_genus = require("torsion_genus", section)
        torsion_len = require("torsion_word_length", section)
        torsion_trials = self.trials(require("torsion_trials", section))

        samples: list[Monodromy] = []
        nonzero = 0
        for g in genera:
            for trial in range(trials):
                family = (
                    MonodromyFamily.SWAPPED_PAIRS if trial % 2 == 0
                    else MonodromyFamily.EXPANDED
                )
                monodromy = random_closed_monodromy(
                    self.rng, g, word_len, family
                )
                sigma = bundle_signature(monodromy)
                samples.append(monodromy)
                nonzero += sigma != 0

                result.check(sigma % 4 == 0, f"sigma={sigma} at g={g}")
                if g in (1, 2):
                    result.check(sigma == 0, f"sigma={sigma} at g={g}")

        reference = None
        for trial in range(torsion_trials):
            monodromy = random_closed_monodromy(
                self.rng, torsion_genus, torsion_len,
                MonodromyFamily.TORSION_POWER
            )
            sigma = bundle_signature(monodromy)
            samples.append(monodromy)
            nonzero += sigma != 0
            reference = sigma if reference is None else reference

            result.check(
                sigma != 0 and sigma % 4 == 0,
                f"torsion sigma={sigma} at g={torsion_genus}",
            )
            result.check(
                sigma == reference,
                f"conjugation moved sigma from {reference} to {sigma}",
            )

        for trial in range(trials):
            monodromy = level_four_monodromy(self.rng, level_genus, level_len)
            sigma = bundle_signature(monodromy)
            samples.append(monodromy)
            result.check(
                sigma % 8 == 0, f"level-four sigma={sigma} at g={level_genus}"
            )

        integers = CoeffGroup(0)
        for index, monodromy in enumerate(samples):
            sigma = bundle_signature(monodromy)
            result.check(
                bundle_signature_lifts(monodromy) == sigma,
                f"lift product differs on sample {index}",
            )
            result.check(
                evaluate_class(MeyerCocycle(), monodromy, integers)
                == evaluate_class(MaslovCocycle(), monodromy, integers),
                f"Meyer and Maslov classes differ on sample {index}",
            )

        result.details["samples"] = len(samples)
        result.details["nonzero_signatures"] = nonzero
        result.details["torsion_signature"] = reference
        return result

    def group_orders(self) -> CriterionResult:
        result = CriterionResult("group_orders")
        section = require("group_orders", self.config)
        budget = require("budget", section)
        orders = []

        for case in require("cases", section):
            g, modulus = require("g", case), require("modulus", case)
            if self.skip_large and (g, modulus) == (2, 4):
                orders.append({"g": g, "modulus": modulus, "skipped": True})
                continue

            which = GroupOrder.SP_MOD2 if modulus == 2 else GroupOrder.SP_MOD4
            table = closure_bfs(standard_generators(g, modulus), budget)
            formula = group_order_formula(g, which)
            result.check(table.size == formula, f"|Sp({2 * g}, Z/{modulus})|")
            entry = {"g": g, "modulus": modulus, "order": table.size}

            if modulus == 4:
                y_count = subgroup_filter(table, y_mask).count
                h_count = quotient_cosets(
                    table, subgroup_filter(table, y_mask)
                ).count
                result.check(
                    y_count == group_order_formula(g, GroupOrder.Y), "|Y|"
                )
                result.check(
                    h_count == group_order_formula(g, GroupOrder.H), "|H|"
                )
                entry.update({"Y": y_count, "H": h_count})
            orders.append(entry)

        result.details["orders"] = orders
        return result

    def subgroup_structure(self) -> CriterionResult:
        result = CriterionResult("subgroup_structure")
        section = require("subgroups", self.config)
        structure = []

        for g in require("genera", section):
            image = closure_bfs(level_two_generators(g, 4))
            y_subset = subgroup_filter(image, y_mask)
            whole = Subset(image.keys)
            cosets = quotient_cosets(image, y_subset)

            normal = is_normal(image, y_subset, standard_generators(g, 4))
            abelian = is_elementary_abelian(whole, image, modulo=y_subset)

            result.check(
                image.size == group_order_formula(g, GroupOrder.LIE_SP_MOD2),
                f"level-two image order at g={g}",
            )
            result.check(normal, f"Y not normal at g={g}")
            result.check(abelian, f"image mod Y not elementary at g={g}")
            result.check(
                cosets.count == 2 ** (2 * g + 1), f"image mod Y order at g={g}"
            )
            structure.append({
                "g": g,
                "Y": y_subset.count,
                "image_mod_Y": cosets.count,
                "normal": normal,
                "elementary_abelian": abelian,
            })

        result.details["structure"] = structure
        return result

    def _random_cochain(self, max_breaks: int) -> NiceCochain:
        count = self.rng.between(1, max_breaks)
        denominator = self.rng.between(count + 1, 4 * count + 4)
        numerators = sorted({0} | {
            self.rng.below(denominator) for _ in range(count - 1)
        })
        return NiceCochain(
            tuple(Fraction(n, denominator) for n in numerators),
            tuple(self.rng.between(-5, 5) for _ in numerators),
        )

    def covering_numbers(self) -> CriterionResult:
        result = CriterionResult("covering_numbers")
        section = require("covering", self.config)
        cases = self.trials(require("random_cases", section))
        max_breaks = require("max_breakpoints", section)
        max_multiple = require("max_multiple", section)

        result.check(covering_number(standard_cocycle()) == 1, "standard")
        result.check(covering_number(tau1_picture()) == 4, "tau_1 picture")
        result.check(
            covering_number(tau1prime_picture()) == 4, "tau'_1 picture"
        )

        for case in range(cases):
            f = self._random_cochain(max_breaks)
            result.check(
                covering_number(from_standard_plus_coboundary(0, f)) == 0,
                f"coboundary case {case}",
            )
            m = self.rng.between(-max_multiple, max_multiple)
            result.check(
                covering_number(from_standard_plus_coboundary(m, f)) == m,
                f"multiple {m} case {case}",
            )
        result.details["random_cases"] = cases
        return result

    def property_suites(self) -> CriterionResult:
        result = CriterionResult("properties")
        section = require("properties", self.config)
        genera = require("genera", section)
        word_len = require("word_length", section)
        trials = self.trials(require("trials", section))

        for trial in range(trials):
            g = genera[trial % len(genera)]
            lags = [random_lagrangian(self.rng, g, word_len) for _ in range(4)]
            l1, l2, l3, l4 = lags
            tau = wall_maslov(l1, l2, l3)
            label = f"trial {trial} (g={g})"

            move = random_symplectic_from(self.rng, g, word_len)
            moved = wall_maslov(l1.image(move), l2.image(move), l3.image(move))
            result.check(moved == tau, f"Sp-invariance, {label}")

            four_term = (
                tau - wall_maslov(l1, l2, l4)
                + wall_maslov(l1, l3, l4) - wall_maslov(l2, l3, l4)
            )
            result.check(four_term == 0, f"4-term relation, {label}")

            result.check(
                wall_maslov(l2, l1, l3) == -tau
                and wall_maslov(l2, l3, l1) == tau,
                f"dihedral symmetry, {label}",
            )

            target = g + 1
            stabilized = wall_maslov(
                *(stabilize_lagrangian(lag, target) for lag in (l1, l2, l3))
            )
            result.check(stabilized == tau, f"stabilization, {label}")

            a = random_symplectic_from(self.rng, g, word_len)
            b = random_symplectic_from(self.rng, g, word_len)
            big_a = embed_stabilize(a, target)
            big_b = embed_stabilize(b, target)
            result.check(
                meyer_cocycle(big_a, big_b) == meyer_cocycle(a, b)
                and maslov_cocycle(big_a, big_b) == maslov_cocycle(a, b),
                f"cocycle restriction, {label}",
            )

        dedekind_trials = self.trials(require("dedekind_trials", section))
        for trial in range(dedekind_trials):
            x = random_rational(self.rng)
            y = random_rational(self.rng)
            result.check(
                2 * dedekind(2 * x) - 4 * dedekind(x) == sign_sin_pi(2 * x),
                f"doubling identity at {x}",
            )
            result.check(
                2 * (dedekind(x) + dedekind(y) - dedekind(x + y))
                == -sign_product(x, y, x + y),
                f"sum identity at ({x}, {y})",
            )

        result.details["trials"] = trials
        result.details["dedekind_trials"] = dedekind_trials
        return result
