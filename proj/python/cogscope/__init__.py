"""Scope-aware cognitive information metrics for MiniLang programs."""

import json
from pathlib import Path

from . import _core
from ._core import AnalysisError, generate, metric_ids, property_ids

__version__ = _core.__version__

__all__ = [
    "AnalysisError",
    "analyze",
    "analyze_file",
    "generate",
    "metric_ids",
    "property_ids",
    "weyuker",
]


def analyze(source, input_file="<string>", metric="all", granules=False):
    """Report for one source text, as a dict."""
    return json.loads(_core.analyze_json(source, input_file, metric, granules))


def analyze_file(path, metric="all", granules=False):
    path = Path(path)
    return analyze(path.read_text(), str(path), metric, granules)


def weyuker(seed=1, trials=1000, metrics=("escim",)):
    """Conformance table for the given metrics, as a dict."""
    return json.loads(_core.weyuker_json(seed, trials, list(metrics)))
