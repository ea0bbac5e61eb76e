from pathlib import Path
from typing import Sequence

import matplotlib
import numpy as np
import pandas as pd

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from src import constants  # noqa: E402
from src.cli.enums import SvgKindEnum  # noqa: E402
from src.cli.exceptions import MissingFigureDataError  # noqa: E402
from src.cli.schemas import OutputBundle  # noqa: E402
from src.core.utils import cli_logger  # noqa: E402

SVG_RC = {"svg.hashsalt": "speclab", "svg.fonttype": "path", "axes.grid": False}
SAFE_BELOW_MARKER = "D"
OTHER_MARKER = "*"
UNNORMALIZED = "unnormalized"


def _read(path: Path) -> pd.DataFrame:
    if not path.is_file():
        raise MissingFigureDataError(detail=f"{path} does not exist")
    return pd.read_csv(path)


def _save(fig: plt.Figure, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def _eigenvalue_plot(directory: Path, title: str) -> Path:
    """
    Scatter of (i, lambda_i); diamonds mark the safe eigenvalues below the critical region, stars
    everything else. Unnormalized spectra get one dashed line at min_i d_i / n.
    """
    values = _read(directory / "eigenvalues.csv")
    region = _read(directory / "region.csv")
    if "laplacian" not in region.columns:
        raise MissingFigureDataError(detail=f"column laplacian is missing from {directory / 'region.csv'}")
    lo = float(region["lo"].iloc[0])
    below = ((values["status"] == "safe") & (values["eigenvalue"] < lo)).to_numpy()
    index = values["index"].to_numpy()
    eigenvalues = values["eigenvalue"].to_numpy()

    fig, ax = plt.subplots(figsize=(4.0, 3.0))
    ax.scatter(index[below], eigenvalues[below], marker=SAFE_BELOW_MARKER, s=24, color="tab:blue")
    ax.scatter(index[~below], eigenvalues[~below], marker=OTHER_MARKER, s=48, color="tab:red")
    if region["laplacian"].iloc[0] == UNNORMALIZED:
        ax.axhline(lo, linestyle="--", linewidth=1.0, color="black")
    ax.set_xlabel("i")
    ax.set_ylabel("eigenvalue")
    ax.set_title(title, fontsize=9)
    return _save(fig, directory / "eigenvalues.svg")


def _eigenvector_plot(directory: Path, title: str, selection: Sequence[int]) -> Path:
    vectors = _read(directory / "eigenvectors.csv")
    missing = [f"v{index}" for index in selection if f"v{index}" not in vectors.columns]
    if missing:
        raise MissingFigureDataError(detail=f"columns {missing} are missing from {directory / 'eigenvectors.csv'}")

    order = np.argsort(vectors["x"].to_numpy(), kind="stable")
    x = vectors["x"].to_numpy()[order]
    fig, axes = plt.subplots(len(selection), 1, sharex=True, figsize=(4.0, 1.4 * len(selection)), squeeze=False)
    for ax, index in zip(axes[:, 0], selection):
        ax.plot(x, vectors[f"v{index}"].to_numpy()[order], marker=".", markersize=3, linewidth=0.8)
        ax.set_ylabel(f"v{index}")
    axes[0, 0].set_title(title, fontsize=9)
    axes[-1, 0].set_xlabel("x")
    return _save(fig, directory / "eigenvectors.svg")


def emit_svg(bundle: OutputBundle, kind: SvgKindEnum, selection: Sequence[int] = (1, 2, 3, 4, 5)) -> tuple[Path, ...]:
    """
    Draw one SVG of the requested kind for every spectrum directory of ``bundle``.

    An empty eigenvector selection writes nothing and logs a warning.

    Raises:
        MissingFigureDataError: If a CSV the figure is drawn from is missing.
    """
    if kind == SvgKindEnum.EIGENVECTORS and not selection:
        cli_logger.warning(constants.EMPTY_EIGENVECTOR_SELECTION)
        return ()
    if not bundle.spectra:
        raise MissingFigureDataError(detail=f"no spectrum was written to {bundle.directory}")

    written = []
    with plt.rc_context(SVG_RC):
        for spectrum in bundle.spectra:
            directory = bundle.directory / spectrum
            title = spectrum if spectrum != "." else str(bundle.manifest.get("scenario", ""))
            if kind == SvgKindEnum.EIGENVALUES:
                written.append(_eigenvalue_plot(directory, title))
            else:
                written.append(_eigenvector_plot(directory, title, selection))

    cli_logger.info(f"Wrote {len(written)} {kind.value} SVG file(s) under {bundle.directory}.")
    return tuple(written)
