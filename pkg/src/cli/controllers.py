from pathlib import Path
from typing import Annotated, Any, Optional

import typer

from config.config import app_settings
from src.cli.enums import CommandEnum
from src.cli.handlers import exception_handler
from src.cli.schemas import OutputBundle
from src.cli.services import dispatch, parse_config

app = typer.Typer(
    name=app_settings.APP_NAME,
    help="Numerical laboratory for the consistency of normalized and unnormalized spectral clustering.",
    add_completion=False,
    no_args_is_help=True,
)

ConfigOption = Annotated[
    Optional[Path], typer.Option("--config", help="JSON config file or a manifest.json of an earlier run.")
]
OutOption = Annotated[Optional[Path], typer.Option("--out", help="Output directory.")]
SeedOption = Annotated[Optional[int], typer.Option("--seed", help="Master seed.")]
DensityOption = Annotated[Optional[str], typer.Option("--density", help="example2 or mixture.")]
SOption = Annotated[Optional[float], typer.Option("--s", help="Inner level of the Example 2 density.")]
KernelOption = Annotated[Optional[str], typer.Option("--kernel", help="gaussian, product or constant.")]
SigmaOption = Annotated[Optional[float], typer.Option("--sigma", help="Gaussian kernel width.")]
ValueOption = Annotated[Optional[float], typer.Option("--value", help="Constant kernel value.")]
KindOption = Annotated[Optional[str], typer.Option("--kind", help="normalized or unnormalized.")]
NOption = Annotated[Optional[int], typer.Option("--n", help="Sample size.")]
NListOption = Annotated[Optional[str], typer.Option("--nlist", help="Comma separated ascending sample sizes.")]
RepsOption = Annotated[Optional[int], typer.Option("--reps", help="Repetitions per sample size.")]
GridOption = Annotated[Optional[int], typer.Option("--grid-n", help="Quadrature grid size of the limit operator.")]
MarginOption = Annotated[Optional[float], typer.Option("--margin", help="Relative margin of the critical region.")]
ROption = Annotated[Optional[int], typer.Option("--r", help="Number of eigenpairs.")]
VectorsOption = Annotated[
    Optional[str], typer.Option("--vectors", help="Comma separated eigenvectors (1-5) to plot; empty plots none.")
]
SvgOption = Annotated[Optional[bool], typer.Option("--svg/--no-svg", help="Write SVG figures.")]
RatiosOption = Annotated[
    Optional[bool],
    typer.Option("--class-ratios/--no-class-ratios", help="Also write eigenvector error to class deviation ratios."),
]


def _run(command: CommandEnum, config: Optional[Path], flags: dict[str, Any]) -> OutputBundle:
    flags = {key: value for key, value in flags.items() if key != "config"}
    bundle = dispatch(parse_config({**flags, "command": command}, config))
    for line in bundle.summary:
        typer.echo(line)
    typer.echo(f"wrote {len(bundle.files)} files to {bundle.directory}")
    return bundle


@app.command(name=CommandEnum.CLUSTER.value)
@exception_handler
def cluster(
    config: ConfigOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    density: DensityOption = None,
    s: SOption = None,
    kernel: KernelOption = None,
    sigma: SigmaOption = None,
    value: ValueOption = None,
    kind: KindOption = None,
    n: NOption = None,
    margin: MarginOption = None,
    r: ROption = None,
    vectors: VectorsOption = None,
    svg: SvgOption = None,
) -> None:
    """
    Bi-partition one sample by its second eigenvector and write its spectrum.
    """
    _run(CommandEnum.CLUSTER, config, dict(locals()))


@app.command(name=CommandEnum.DIAGNOSE.value)
@exception_handler
def diagnose(
    config: ConfigOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    density: DensityOption = None,
    s: SOption = None,
    kernel: KernelOption = None,
    sigma: SigmaOption = None,
    value: ValueOption = None,
    kind: KindOption = None,
    n: NOption = None,
    margin: MarginOption = None,
    r: ROption = None,
    vectors: VectorsOption = None,
    svg: SvgOption = None,
) -> None:
    """
    Classify every eigenvalue against the critical region [min d_i/n, max d_i/n].
    """
    _run(CommandEnum.DIAGNOSE, config, dict(locals()))


@app.command(name=CommandEnum.LIMIT.value)
@exception_handler
def limit(
    config: ConfigOption = None,
    out: OutOption = None,
    density: DensityOption = None,
    s: SOption = None,
    kernel: KernelOption = None,
    sigma: SigmaOption = None,
    value: ValueOption = None,
    kind: KindOption = None,
    grid_n: GridOption = None,
    r: ROption = None,
) -> None:
    """
    Eigenpairs of the discretized limit operator and the range of the degree function.
    """
    _run(CommandEnum.LIMIT, config, dict(locals()))


@app.command(name=CommandEnum.CONVERGE.value)
@exception_handler
def converge(
    config: ConfigOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    density: DensityOption = None,
    s: SOption = None,
    kernel: KernelOption = None,
    sigma: SigmaOption = None,
    value: ValueOption = None,
    kind: KindOption = None,
    nlist: NListOption = None,
    reps: RepsOption = None,
    grid_n: GridOption = None,
    class_ratios: RatiosOption = None,
) -> None:
    """
    Convergence of lambda_2 and its eigenvector towards the limit operator over n_list x reps.
    """
    flags = dict(locals())
    flags["n_list"] = flags.pop("nlist")
    _run(CommandEnum.CONVERGE, config, flags)


@app.command(name=CommandEnum.SUPDEV.value)
@exception_handler
def supdev(
    config: ConfigOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    density: DensityOption = None,
    s: SOption = None,
    kernel: KernelOption = None,
    sigma: SigmaOption = None,
    value: ValueOption = None,
    kind: KindOption = None,
    nlist: NListOption = None,
    reps: RepsOption = None,
    grid_n: GridOption = None,
) -> None:
    """
    Empirical sup deviation sup_x |d_n(x) - d(x)| over n_list x reps.
    """
    flags = dict(locals())
    flags["n_list"] = flags.pop("nlist")
    _run(CommandEnum.SUPDEV, config, flags)


@app.command(name=CommandEnum.FIGURES.value)
@exception_handler
def figures(
    config: ConfigOption = None,
    out: OutOption = None,
    seed: SeedOption = None,
    n: NOption = None,
    margin: MarginOption = None,
    vectors: VectorsOption = None,
    svg: SvgOption = None,
) -> None:
    """
    Spectra of both Laplacians on one four-component mixture sample for sigma in 1, 2, 5, 50.
    """
    _run(CommandEnum.FIGURES, config, dict(locals()))
