"""
Grid Sampling

Samples the field and the potential on a regular lattice over the bounding
box of an orbit simplex and reads/writes the result as CSV.
"""

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Union

import numpy as np

from core.catalog import HermannActionSpec, build_simplex
from core.field import WALL_EPS, evaluate_batch
from utils.helpers import format_number


MIN_RESOLUTION = 2
MAX_RESOLUTION = 2000
CSV_HEADER = ["x1", "x2", "X1", "X2", "normX", "phi"]

logger = logging.getLogger(__name__)


@dataclass
class GridSample:
    """Interior lattice points with field and potential, sorted by (x1, x2)."""

    action_id: str
    resolution: int
    x1: np.ndarray
    x2: np.ndarray
    X1: np.ndarray
    X2: np.ndarray
    norm: np.ndarray
    phi: np.ndarray

    def __len__(self) -> int:
        return len(self.x1)

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.x1, self.x2])

    def argmin_norm(self) -> int:
        return int(np.argmin(self.norm))

    def __str__(self) -> str:
        return f"{self.action_id}: {len(self)} points at resolution {self.resolution}"


def sample_grid(action: HermannActionSpec, resolution: int, workers: int = 1,
                wall_eps: float = WALL_EPS) -> GridSample:
    """
    Evaluate the field on an N x N lattice and keep the interior points.

    Args:
        action: Catalog row
        resolution: Lattice points per axis, in [2, 2000]
        workers: Threads for the evaluation; the result does not depend on it
        wall_eps: Points within 10 * wall_eps of a wall are dropped

    Returns:
        GridSample in x-major order

    Raises:
        ValueError: If the resolution is out of range
    """
    if not MIN_RESOLUTION <= resolution <= MAX_RESOLUTION:
        raise ValueError(f"Grid resolution must be in [{MIN_RESOLUTION}, {MAX_RESOLUTION}], got {resolution}")

    simplex = build_simplex(action)
    x_min, x_max, y_min, y_max = simplex.bounding_box()
    xs = np.linspace(x_min, x_max, resolution)
    ys = np.linspace(y_min, y_max, resolution)
    grid_x, grid_y = np.meshgrid(xs, ys, indexing="ij")
    lattice = np.column_stack([grid_x.ravel(), grid_y.ravel()])

    inside = lattice[simplex.clearances(lattice) > 10 * wall_eps]

    chunks = np.array_split(inside, max(1, workers)) if len(inside) else []
    chunks = [chunk for chunk in chunks if len(chunk)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda chunk: evaluate_batch(action, chunk), chunks))

    if results:
        vectors = np.vstack([vectors for vectors, _ in results])
        phi = np.concatenate([phi for _, phi in results])
    else:
        vectors, phi = np.empty((0, 2)), np.empty(0)

    logger.info(f"{action.id}: sampled {len(inside)} of {len(lattice)} lattice points")
    return GridSample(
        action_id=action.id,
        resolution=resolution,
        x1=inside[:, 0] if len(inside) else np.empty(0),
        x2=inside[:, 1] if len(inside) else np.empty(0),
        X1=vectors[:, 0],
        X2=vectors[:, 1],
        norm=np.hypot(vectors[:, 0], vectors[:, 1]),
        phi=phi,
    )


def grid_rows(sample: GridSample) -> List[List[str]]:
    columns = (sample.x1, sample.x2, sample.X1, sample.X2, sample.norm, sample.phi)
    return [[format_number(float(column[i])) for column in columns] for i in range(len(sample))]


def write_csv(sample: GridSample, path: Union[str, Path]) -> Path:
    """Write the sample with LF line endings and 10 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(grid_rows(sample))
    logger.info(f"Wrote {len(sample)} grid rows to {path}")
    return path


def read_csv(path: Union[str, Path], action_id: str = "", resolution: int = 0) -> GridSample:
    """
    Read a grid CSV back into a GridSample.

    Raises:
        ValueError: If the header does not match
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ValueError(f"Unexpected grid CSV header in {path}: {header}")
        values = np.array([[float(cell) for cell in row] for row in reader], dtype=float).reshape(-1, 6)
    return GridSample(action_id, resolution, *(values[:, i] for i in range(6)))
