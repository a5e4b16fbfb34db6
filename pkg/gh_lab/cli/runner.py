"""
Execution of one validated RunConfig.

Each subcommand has a handler that computes an Artifact; `run` renders it in
the requested format, writes it to the output path or stdout, and turns
GHLabError into the process exit code.
"""

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import typer
from pydantic import BaseModel, Field

from gh_lab.bounds.cells import known_facts
from gh_lab.bounds.hemisphere import verify_distortion
from gh_lab.bounds.table import build_table
from gh_lab.complexes.homology import f2_homology
from gh_lab.complexes.vietoris_rips import build_vr
from gh_lab.core.config import RunConfig, get_settings
from gh_lab.core.console import console, get_logger
from gh_lab.core.exceptions import GHLabError, ValidationError
from gh_lab.core.random import sample_sphere
from gh_lab.covering.certificates import (
    build_certificate,
    lower_bound_from_certificate,
    projective_cover_bound,
)
from gh_lab.geometry.constants import r_n, t_n
from gh_lab.geometry.io import read_points
from gh_lab.metric.io import read_distance_matrix
from gh_lab.metric.oracle import gh_bruteforce
from gh_lab.metric.space import FiniteMetricSpace
from gh_lab.odd_maps.estimators import estimate_distortion, estimate_modulus
from gh_lab.odd_maps.registry import build_odd_function
from gh_lab.reporting.formats import round_floats, to_csv, to_json
from gh_lab.reporting.renderer import ReportRenderer

logger = get_logger("cli.runner")

DEFAULT_ETA = 0.05
DEFAULT_HOMOLOGY_DIM = 2


class Artifact(BaseModel):
    """
    What a subcommand produces.

    Attributes:
        payload: The JSON document
        records: Rows for CSV and the markdown table
        text: Pre-rendered output that bypasses the generic formats
    """

    title: str
    payload: Dict[str, Any] = Field(default_factory=dict)
    records: List[Dict[str, Any]] = Field(default_factory=list)
    columns: List[str] = Field(default_factory=list)
    text: Optional[str] = None


def _require(value: Any, option: str) -> Any:
    if value is None:
        raise ValidationError(f"This subcommand needs {option}")
    return value


def _input(config: RunConfig, name: str) -> Path:
    path = config.inputs.get(name)
    if path is None:
        raise ValidationError(f"This subcommand needs --{name}")
    return path


def _samples(config: RunConfig) -> int:
    return config.samples if config.samples is not None else get_settings().validation_samples


def _table(config: RunConfig) -> Artifact:
    table = build_table(max_n=config.max_n, max_k=config.max_k, metric=config.metric)
    return Artifact(title="bounds table", text=table.render(config.output_format))


def _verify_theorem1(config: RunConfig) -> Artifact:
    n = _require(config.n, "--n")
    report = verify_distortion(n, samples=_samples(config), seed=config.seed)
    payload = report.model_dump()
    payload["passed"] = report.passed
    records = [
        {"case": name, "maximum": case.maximum, "count": case.count}
        for name, case in sorted(report.cases.items())
    ]
    return Artifact(
        title=f"Hemisphere correspondence S^{n + 1} vs S^{n}",
        payload=payload,
        records=records,
        columns=["case", "maximum", "count"],
    )


def _covering(config: RunConfig) -> Artifact:
    method = config.construction or "greedy"
    certificate = build_certificate(method, n=config.n, k=config.k, epsilon=config.r, seed=config.seed)
    if config.projective:
        certificate = projective_cover_bound(certificate)
    certificate = certificate.check_coverage(samples=config.samples, seed=config.seed)

    payload: Dict[str, Any] = {
        "space": certificate.space.symbol,
        "method": certificate.method,
        "k": certificate.k,
        "radius_bound": certificate.radius_bound,
        "centers": certificate.centers,
        "validation": certificate.validation.model_dump() if certificate.validation else None,
        "passed": bool(certificate.validation and certificate.validation.passed),
    }
    if certificate.projective:
        bound = lower_bound_from_certificate(certificate)
        payload["lower_bound"] = {"n": bound.n, "k": bound.k, "value": bound.value}

    columns = [f"x{i}" for i in range(certificate.centers.shape[1])]
    records = [dict(zip(columns, row)) for row in certificate.centers.tolist()]
    return Artifact(title=f"Covering certificate for {certificate.space.symbol}",
                    payload=payload, records=records, columns=columns)


def _vr_homology(config: RunConfig) -> Artifact:
    points, symmetric = read_points(_input(config, "points"))
    r = _require(config.r, "--r")
    up_to = config.max_dim if config.max_dim is not None else DEFAULT_HOMOLOGY_DIM

    space = FiniteMetricSpace.from_points(points, metric=config.metric, symmetric=True if symmetric else None)
    complex_ = build_vr(space, r, up_to + 1, budget=config.budget)
    betti = f2_homology(complex_, up_to)

    export = config.inputs.get("export")
    if export is not None:
        complex_.export_simplices(export)
        console.print(f"[green]✓[/green] Exported {len(complex_.simplices)} simplices to {export}")

    payload = {
        "betti": betti.values,
        "f_vector": complex_.f_vector(),
        "r": r,
        "max_dim": up_to,
        "metric": config.metric,
    }
    records = [{"dim": d, "betti": b} for d, b in enumerate(betti.values)]
    return Artifact(title=f"VR homology at r = {r}", payload=payload, records=records,
                    columns=["dim", "betti"])


def _oracle_gh(config: RunConfig) -> Artifact:
    x = read_distance_matrix(_input(config, "x"))
    y = read_distance_matrix(_input(config, "y"))
    result = gh_bruteforce(x, y, max_cells=config.budget)
    pairs = [{"x": x.labels[i], "y": y.labels[j]} for i, j in result.correspondence.pairs]
    payload = {
        "value": result.value,
        "distortion": result.distortion,
        "correspondence": [[p["x"], p["y"]] for p in pairs],
    }
    return Artifact(title="Gromov-Hausdorff distance", payload=payload, records=pairs, columns=["x", "y"])


def _odd_map(config: RunConfig) -> Artifact:
    construction = _require(config.construction, "--construction")
    n = _require(config.n, "--n")
    f = build_odd_function(construction, n, k=config.k, epsilon=config.r, seed=config.seed)
    samples = _samples(config)
    eta = config.eta if config.eta is not None else DEFAULT_ETA

    points = sample_sphere(config.seed, samples, f.source_dim, chunk_size=get_settings().chunk_size)
    estimate = estimate_modulus(f, eta, points=points)
    payload = {
        "construction": construction,
        "source_dim": f.source_dim,
        "target_dim": f.target_dim,
        "samples": samples,
        "seed": config.seed,
        "eta": eta,
        "delta_hat": estimate.delta_hat,
        "dis_hat": estimate_distortion(f, points=points, eta=eta, seed=config.seed),
        "oddness_violations": f.oddness_violations(points),
        "worst_point": estimate.worst_point,
    }
    return Artifact(title=f"Odd function {construction}: S^{f.source_dim} -> S^{f.target_dim}",
                    payload=payload)


def _constants(config: RunConfig) -> Artifact:
    rows = [{"n": n, "r_n": r_n(n), "t_n": t_n(n)} for n in range(1, config.max_n + 1)]
    facts = [
        fact.model_dump()
        for fact in known_facts(config.max_k)
        if fact.n >= 1 and fact.k > fact.n
    ]
    return Artifact(title="Constants", payload={"constants": rows, "known_facts": facts},
                    records=rows, columns=["n", "r_n", "t_n"])


HANDLERS: Dict[str, Callable[[RunConfig], Artifact]] = {
    "table": _table,
    "verify-theorem1": _verify_theorem1,
    "covering": _covering,
    "vr-homology": _vr_homology,
    "oracle-gh": _oracle_gh,
    "odd-map": _odd_map,
    "constants": _constants,
}


def render(artifact: Artifact, output_format: str) -> str:
    """Render an artifact as json, csv or markdown."""
    if artifact.text is not None:
        return artifact.text
    if output_format == "json":
        return to_json(artifact.payload)
    if output_format == "csv":
        if artifact.records:
            return to_csv(artifact.records, artifact.columns)
        scalars = _scalar_items(artifact.payload)
        return to_csv([dict(scalars)], [key for key, _ in scalars])
    if output_format == "markdown":
        return ReportRenderer().render(
            "report.md.jinja",
            title=artifact.title,
            items=_scalar_items(artifact.payload),
            records=round_floats(artifact.records),
            columns=artifact.columns,
        )
    raise ValidationError(f"Unknown output format: {output_format}")


def _scalar_items(payload: Dict[str, Any]) -> List[Any]:
    rounded = round_floats(payload)
    return [
        (key, rounded[key])
        for key in sorted(rounded)
        if not isinstance(rounded[key], (list, dict))
    ]


def emit(text: str, output_path: Optional[Path]) -> None:
    """Write to the output path, or to stdout when there is none."""
    if output_path is None:
        typer.echo(text, nl=False)
        return
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    console.print(f"[green]✓[/green] Wrote {output_path}")


def run(config: RunConfig) -> int:
    """
    Run one subcommand.

    Returns:
        Exit status: 0 on success, otherwise the failing error's exit code
        (2 for validation and file errors, 3 for exceeded budgets)
    """
    try:
        handler = HANDLERS.get(config.subcommand)
        if handler is None:
            raise ValidationError(f"Unknown subcommand: {config.subcommand}")
        logger.debug("running %s with %s", config.subcommand, config.model_dump(exclude_none=True))
        emit(render(handler(config), config.output_format), config.output_path)
        return 0
    except GHLabError as e:
        report_error(e)
        return e.exit_code


def report_error(error: GHLabError) -> None:
    console.print(f"[red]✗[/red] {error.message}")
    for key, value in error.details.items():
        console.print(f"  [dim]{key}: {value}[/dim]")


__all__ = ["Artifact", "HANDLERS", "render", "emit", "run", "report_error"]
