"""Randomized sweeps: run the pipeline over many random uniform presentations."""

from __future__ import annotations

import logging
from dataclasses import replace

import numpy as np
import pandas as pd

from morphic_words.errors import MorphicError
from morphic_words.fixedpoint import MorphicPresentation
from morphic_words.morphism import Coding, Morphism
from morphic_words.nonuniformize import NonUniformizationResult, PipelineConfig, nonuniformize
from morphic_words.verify import VerificationReport, bounded_period_check, verify_nonuniform_presentation
from morphic_words.words import Word

logger = logging.getLogger(__name__)

OUTPUT_LETTERS = ("x", "y")


# ── Generation ──────────────────────────────────────────────────────────────

def random_uniform_presentation(
    rng: np.random.Generator,
    arity: int,
    size: int,
    coded: bool = False,
) -> MorphicPresentation:
    """A random *arity*-uniform morphism on letters 0..size-1, prolongable from 0.

    Uniform images are never empty, so no letter is mortal and m(0) = 0 x is
    always prolongable.
    """
    if arity < 2:
        raise ValueError("arity must be at least 2")
    letters = [str(i) for i in range(size)]
    images = {}
    for s in letters:
        image = rng.choice(letters, size=arity).tolist()
        if s == "0":
            image[0] = "0"
        images[s] = Word(image)
    morphism = Morphism(letters, letters, images)
    coding = None
    if coded:
        coding = Coding.from_pairs({s: str(rng.choice(OUTPUT_LETTERS)) for s in letters})
    return MorphicPresentation(morphism, "0", coding)


def random_presentations(
    n_samples: int,
    seed: int = 42,
    arities: tuple[int, ...] = (2, 3),
    sizes: tuple[int, ...] = (2, 3, 4),
    coded: bool = False,
    config: PipelineConfig | None = None,
) -> list[MorphicPresentation]:
    """*n_samples* random presentations whose guard prefix does not look periodic.

    Candidates failing the periodicity guard are redrawn, up to 50 draws per
    requested sample.
    """
    config = config or PipelineConfig()
    rng = np.random.default_rng(seed)
    found: list[MorphicPresentation] = []
    attempts = 0
    max_attempts = 50 * n_samples
    while len(found) < n_samples and attempts < max_attempts:
        attempts += 1
        arity = int(rng.choice(arities))
        size = int(rng.choice(sizes))
        p = random_uniform_presentation(rng, arity, size, coded=coded)
        form = bounded_period_check(p.prefix(config.guard_length), config.max_preperiod, config.max_period)
        if form is None:
            found.append(p)
    if len(found) < n_samples:
        logger.warning("only %d of %d presentations after %d draws", len(found), n_samples, attempts)
    logger.info("drew %d presentations in %d attempts", len(found), attempts)
    return found


# ── Metric extraction ──────────────────────────────────────────────────────

def _extract_metrics(p: MorphicPresentation, result: NonUniformizationResult, report: VerificationReport) -> dict:
    metrics = {
        "morphism": str(p.morphism),
        "arity": p.uniform_arity,
    }
    metrics.update(result.summary())
    metrics["passed"] = report.overall
    metrics["failures"] = ", ".join(c.name for c in report.failures)
    metrics["error"] = ""
    return metrics


def pipeline_sweep(
    presentations: list[MorphicPresentation],
    n: int = 10_000,
    config: PipelineConfig | None = None,
) -> pd.DataFrame:
    """Run nonuniformize and the full check on each presentation.

    Returns one row per presentation. Pipeline errors are recorded in the
    ``error`` column instead of aborting the sweep.
    """
    # inputs are assumed to be guard-filtered already
    config = replace(config or PipelineConfig(), assert_aperiodic=True)
    rows = []
    for i, p in enumerate(presentations):
        try:
            result = nonuniformize(p, config)
            report = verify_nonuniform_presentation(result, p, n)
        except MorphicError as exc:
            logger.warning("sample %d (%s) failed: %s", i, p.morphism, exc)
            rows.append({"morphism": str(p.morphism), "arity": p.uniform_arity, "passed": False, "error": str(exc)})
            continue
        metrics = _extract_metrics(p, result, report)
        metrics["sample_id"] = i
        rows.append(metrics)
    return pd.DataFrame(rows)
