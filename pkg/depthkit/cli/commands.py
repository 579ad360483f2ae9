"""Subcommand handlers: read inputs, call the library, write CSV/JSON and a manifest."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Mapping
from pathlib import Path

import numpy as np
import pandas as pd
from scipy import stats

from depthkit.analysis import build_experiment
from depthkit.boundary import (
    CenterRule,
    ShellPolicy,
    angular_measure,
    extract_boundary_shell,
    gradient,
    locate_center,
)
from depthkit.cli.bootstrap import RunContext
from depthkit.cli.io import (
    parse_floats,
    parse_ints,
    parse_points,
    read_dataset_csv,
    sidecar,
    write_dataset_csv,
    write_frame,
    write_json,
    write_yaml,
)
from depthkit.cli.manifest import RunManifest
from depthkit.datagen import GeneratorSpec, generate, load_generator_spec, preset, spec_to_dict
from depthkit.errors import InputError
from depthkit.geometry import Dataset, FloatArray, Metric, metric_from_name
from depthkit.mmad import (
    MMAD_METHOD,
    DepthSettings,
    check_method,
    contour_grid,
    depth_3mad,
    evaluate_depth,
    shell_assign,
)
from depthkit.univariate import (
    DensityModel,
    UnivariateSample,
    boundary_mass_balance,
    depth_univariate,
    g_derivative,
    g_scale_many,
    g_scale_population,
    g_subdifferential,
    g_subdifferential_population,
)
from depthkit.utils import log_config, log_header, log_operation, log_success

PRESET_PREFIX = "preset:"
_BOUNDS_PADDING = 0.1


def _out(args: argparse.Namespace) -> Path | None:
    return None if args.output is None else Path(args.output)


def _generator_spec(text: str) -> tuple[GeneratorSpec, Path | None]:
    if text.startswith(PRESET_PREFIX):
        return preset(text.removeprefix(PRESET_PREFIX)), None
    path = Path(text)
    return load_generator_spec(path), path


def _generation_seed(spec: GeneratorSpec, ctx: RunContext) -> int:
    if ctx.seed_explicit or spec.seed is None:
        return ctx.seed
    return spec.seed


def _load_data(
    args: argparse.Namespace,
    ctx: RunContext,
    logger: logging.Logger,
) -> tuple[Dataset, dict[str, Path | None], dict[str, object]]:
    """Dataset from ``--input`` or ``--simulate`` plus its manifest entries."""
    if args.input is not None:
        path = Path(args.input)
        data = read_dataset_csv(path)
        log_operation(logger, f"read {data.n} observations (d={data.d}) from {path}")
        return data, {"input": path}, {"input": str(path)}
    spec, spec_path = _generator_spec(args.simulate)
    seed = _generation_seed(spec, ctx)
    data = generate(spec, seed)
    log_operation(logger, f"generated {spec.kind.value} sample n={data.n} d={data.d} seed={seed}")
    return data, {"simulate": spec_path}, {"simulate": args.simulate, "generator_seed": seed}


def _finish(
    args: argparse.Namespace,
    ctx: RunContext,
    parameters: Mapping[str, object],
    inputs: Mapping[str, Path | None],
    logger: logging.Logger,
) -> None:
    out = _out(args)
    if out is None:
        return
    manifest = RunManifest.for_inputs(args.command, parameters, ctx.seed, inputs)
    write_json(manifest.to_dict(), sidecar(out, ".manifest.json"))
    log_success(logger, f"wrote {out}")


def _ranks(depth: FloatArray) -> FloatArray:
    # 1 = deepest; ties share the smallest rank.
    return stats.rankdata(-depth, method="min").astype(np.int64)


def cmd_depth(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Per-observation (or per-query) depth under one method."""
    data, inputs, params = _load_data(args, ctx, logger)
    method = check_method(args.method)
    params |= {
        "method": method,
        "metric": args.metric,
        "directions": args.directions,
        "exact_2d": not args.approximate,
        "query": args.query,
    }
    log_config(logger, params, title="depth")
    metric = metric_from_name(args.metric, data) if method == MMAD_METHOD else Metric.l2()
    queries = parse_points(args.query, data.d, "--query") if args.query else None
    columns: dict[str, object] = {}
    if method == MMAD_METHOD:
        dv = depth_3mad(data, metric, queries, ctx.threads)
        phi, depth = (dv.phi, dv.depth) if queries is None else (dv.query_phi, dv.query_depth)
        columns["index"] = np.arange(phi.shape[0])
        columns["phi"] = phi
    else:
        settings = DepthSettings(metric, args.directions, ctx.seed, not args.approximate, ctx.threads)
        depth = evaluate_depth(method, data, settings, queries)
        columns["index"] = np.arange(depth.shape[0])
    columns["depth"] = depth
    columns["rank"] = _ranks(depth)
    write_frame(pd.DataFrame(columns), _out(args))
    _finish(args, ctx, params, inputs, logger)


def _default_bounds(data: Dataset) -> tuple[float, float, float, float]:
    low = data.values.min(axis=0)
    high = data.values.max(axis=0)
    pad = np.where(high > low, _BOUNDS_PADDING * (high - low), 1.0)
    return (float(low[0] - pad[0]), float(high[0] + pad[0]), float(low[1] - pad[1]), float(high[1] + pad[1]))


def cmd_contour(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Φ or depth on a regular 2-D grid."""
    data, inputs, params = _load_data(args, ctx, logger)
    if data.d != 2:  # noqa: PLR2004
        msg = f"contour grids need 2-dimensional data, got d={data.d}"
        raise InputError(msg)
    if args.bounds is not None:
        b = parse_floats(args.bounds, "--bounds", 4)
        bounds = (b[0], b[1], b[2], b[3])
    else:
        bounds = _default_bounds(data)
    nx, ny = parse_ints(args.res, "--res", 2)
    params |= {
        "metric": args.metric,
        "field": args.field,
        "method": args.method,
        "bounds": list(bounds),
        "res": [nx, ny],
        "directions": args.directions,
        "exact_2d": not args.approximate,
    }
    log_config(logger, params, title="contour")
    metric = metric_from_name(args.metric, data)
    settings = DepthSettings(metric, args.directions, ctx.seed, not args.approximate, ctx.threads)
    grid = contour_grid(data, metric, bounds, (nx, ny), args.field, args.method, settings)
    frame = pd.DataFrame(grid.rows(), columns=["x", "y", "value"])
    preamble = f"# field={grid.field_kind.value} metric={grid.metric_name} method={grid.method}\n"
    write_frame(frame, _out(args), preamble=preamble)
    _finish(args, ctx, params, inputs, logger)


def cmd_shells(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Quantile-shell index of every observation."""
    data, inputs, params = _load_data(args, ctx, logger)
    levels = parse_floats(args.levels, "--levels")
    params |= {"metric": args.metric, "levels": list(levels)}
    log_config(logger, params, title="shells")
    dv = depth_3mad(data, metric_from_name(args.metric, data), threads=ctx.threads)
    assignment = shell_assign(dv, levels)
    logger.info("shell sizes: %s", assignment.sizes())
    frame = pd.DataFrame({"index": np.arange(data.n), "phi": dv.phi, "shell_index": assignment.shell_index})
    write_frame(frame, _out(args))
    _finish(args, ctx, params, inputs, logger)


def _center(text: str, data: Dataset, metric: Metric, threads: int) -> FloatArray:
    if text.lower() in {r.value for r in CenterRule}:
        return locate_center(text, data, metric, threads)
    return np.asarray(parse_floats(text, "--center", data.d))


def cmd_boundary(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Boundary shell directions at a center, with gradient and resultant."""
    data, inputs, params = _load_data(args, ctx, logger)
    params |= {
        "metric": args.metric,
        "center": args.center,
        "mmin": args.mmin,
        "fraction": args.fraction,
        "epsilon": args.epsilon,
    }
    log_config(logger, params, title="boundary")
    metric = metric_from_name(args.metric, data)
    v = _center(args.center, data, metric, ctx.threads)
    shell = extract_boundary_shell(v, data, metric, ShellPolicy(args.mmin, args.fraction, args.epsilon))
    measure = angular_measure(shell)
    grad = gradient(v, shell)
    columns: dict[str, object] = {"index": shell.member_indices}
    if measure.angles is not None:
        columns["angle"] = measure.angles
    for j in range(data.d):
        columns[f"u{j + 1}"] = measure.directions[:, j]
    columns["weight"] = measure.weights
    summary = {
        "center": v.tolist(),
        "phi": shell.radius,
        "half_width": shell.half_width,
        "shell_size": shell.size,
        "gradient": grad.tolist(),
        "resultant": measure.resultant.tolist(),
        "resultant_length": measure.resultant_length,
    }
    logger.info("shell of %d points, resultant length %.6g", shell.size, measure.resultant_length)
    out = _out(args)
    write_frame(pd.DataFrame(columns), out)
    if out is not None:
        write_json(summary, sidecar(out, ".json"))
    _finish(args, ctx, params, inputs, logger)


def cmd_univariate(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """G, depth and slopes of a 1-D sample or an analytic density at given points."""
    at = np.asarray(parse_floats(args.at, "--at"))
    params: dict[str, object] = {"at": at.tolist()}
    inputs: dict[str, Path | None] = {}
    if args.model is not None:
        model = DensityModel.parse(args.model)
        params["model"] = model.describe()
        log_config(logger, params, title="univariate")
        subs = [g_subdifferential_population(float(v), model) for v in at]
        frame = pd.DataFrame(
            {
                "v": at,
                "g": [g_scale_population(float(v), model) for v in at],
                "g_derivative": [g_derivative(float(v), model) for v in at],
                "boundary_mass": [boundary_mass_balance(float(v), model) for v in at],
                "sub_lower": [s.lower for s in subs],
                "sub_upper": [s.upper for s in subs],
            },
        )
    else:
        path = Path(args.input)
        data = read_dataset_csv(path)
        if not 0 <= args.column < data.d:
            msg = f"--column {args.column} is out of range for {data.d} column(s)"
            raise InputError(msg)
        sample = UnivariateSample.from_values(data.values[:, args.column])
        inputs["input"] = path
        params |= {"input": str(path), "column": args.column}
        log_config(logger, params, title="univariate")
        subs = [g_subdifferential(float(v), sample) for v in at]
        frame = pd.DataFrame(
            {
                "v": at,
                "g": g_scale_many(at, sample),
                "depth": depth_univariate(at, sample),
                "sub_lower": [s.lower for s in subs],
                "sub_upper": [s.upper for s in subs],
            },
        )
    write_frame(frame, _out(args))
    _finish(args, ctx, params, inputs, logger)


def cmd_simulate(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Write a generated sample to CSV."""
    spec, spec_path = _generator_spec(args.spec)
    if args.n is not None:
        spec = spec.with_n(args.n)
    seed = _generation_seed(spec, ctx)
    params: dict[str, object] = {"spec": args.spec, "n": spec.n, "generator_seed": seed}
    log_config(logger, params, title="simulate")
    write_dataset_csv(generate(spec, seed), _out(args))
    _finish(args, ctx, {**params, "model": spec_to_dict(spec)}, {"spec": spec_path}, logger)


def cmd_experiment(args: argparse.Namespace, ctx: RunContext, logger: logging.Logger) -> None:
    """Run a packaged experiment, write its tables, then enforce its bands."""
    overrides = list(args.set or [])
    if args.replicates is not None:
        overrides.append(f"replicates={args.replicates}")
    if ctx.seed_explicit:
        overrides.append(f"seed={ctx.seed}")
    log_header(logger, "experiment", args.name)
    experiment = build_experiment(args.name, overrides, ctx.threads, logger=logger)
    log_config(logger, experiment.config, title="config")
    outcome = experiment.run()

    out_dir = Path(args.output)
    for stem, frame in outcome.tables.items():
        write_frame(frame, out_dir / f"{stem}.csv", index=frame.index.name is not None)
    write_json(outcome.report(), out_dir / "summary.json")
    write_yaml(outcome.config, out_dir / "config.yaml")
    manifest = RunManifest(args.command, {"name": args.name, "overrides": overrides}, experiment.base_seed)
    write_json(manifest.to_dict(), out_dir / "manifest.json")
    log_success(logger, f"wrote {len(outcome.tables) + 3} files to {out_dir}")
    outcome.raise_for_verdicts()
    log_success(logger, f"{args.name}: all acceptance bands passed")
