"""Reading and writing fleet trajectories as CSV.

File layout: header ``tick,vehicle_id,x_m,y_m`` followed by one row per
vehicle per tick. Ticks run 0..T−1 without gaps and in non-decreasing order;
every tick lists each of the vehicle ids 0..N−1 exactly once.
"""

import csv
import math
from pathlib import Path

import numpy as np

from cooploc.errors import TrajectoryParseError
from cooploc.fleet.trajectory import FleetTrajectory

HEADER = ("tick", "vehicle_id", "x_m", "y_m")


def _parse_row(row: list[str], line: int) -> tuple[int, int, float, float]:
    """Convert one data row, rejecting malformed fields."""
    if len(row) != len(HEADER):
        raise TrajectoryParseError(f"expected {len(HEADER)} fields, got {len(row)}", line)
    try:
        tick = int(row[0])
        vehicle = int(row[1])
        x = float(row[2])
        y = float(row[3])
    except ValueError as error:
        raise TrajectoryParseError(f"malformed row {row!r}", line) from error
    if tick < 0 or vehicle < 0:
        raise TrajectoryParseError(f"negative tick or vehicle id in {row!r}", line)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise TrajectoryParseError(f"non-finite coordinate in {row!r}", line)
    return tick, vehicle, x, y


def _close_tick(
    tick: int, positions: dict[int, tuple[float, float]], n_vehicles: int | None, line: int
) -> int:
    """Check that a finished tick holds exactly vehicles 0..N−1."""
    expected = len(positions) if n_vehicles is None else n_vehicles
    if sorted(positions) != list(range(expected)):
        raise TrajectoryParseError(
            f"tick {tick} has vehicles {sorted(positions)}, expected ids 0..{expected - 1}", line
        )
    return expected


def load_trajectories(path: Path | str, dt: float = 1.0) -> FleetTrajectory:
    """Parse a trajectory CSV.

    Heading, speed and yaw rate are not stored in the file; they are
    estimated from consecutive positions.

    Args:
        path: CSV file to read
        dt: Seconds between consecutive ticks

    Returns:
        FleetTrajectory with T ticks of N vehicles

    Raises:
        TrajectoryParseError: On a bad header, malformed row, gap or reversal
            in the tick sequence, duplicate or missing vehicle, or a vehicle
            count that changes between ticks
        OSError: If the file cannot be read
    """
    ticks: list[dict[int, tuple[float, float]]] = []
    n_vehicles: int | None = None

    with open(path, "r", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(name.strip() for name in header) != HEADER:
            raise TrajectoryParseError(f"header must be {','.join(HEADER)}, got {header}", 1)

        for row in reader:
            line = reader.line_num
            if not row:
                continue
            tick, vehicle, x, y = _parse_row(row, line)

            current = len(ticks) - 1
            if tick < current:
                raise TrajectoryParseError(f"tick {tick} follows tick {current}", line)
            if tick > current + 1:
                raise TrajectoryParseError(f"tick {current + 1} is missing", line)
            if tick == current + 1:
                if ticks:
                    n_vehicles = _close_tick(current, ticks[-1], n_vehicles, line)
                ticks.append({})

            positions = ticks[-1]
            if vehicle in positions:
                raise TrajectoryParseError(f"vehicle {vehicle} listed twice at tick {tick}", line)
            positions[vehicle] = (x, y)

        if not ticks:
            raise TrajectoryParseError("file holds no trajectory rows", reader.line_num)
        _close_tick(len(ticks) - 1, ticks[-1], n_vehicles, reader.line_num)

    count = len(ticks[0])
    grid = np.array([[positions[i] for i in range(count)] for positions in ticks])
    return FleetTrajectory.from_positions(grid[:, :, 0], grid[:, :, 1], dt=dt)


def write_trajectories(trajectory: FleetTrajectory, path: Path | str) -> Path:
    """Write the positions of a trajectory as CSV.

    Coordinates are written with repr precision so reloading reproduces them
    exactly.

    Returns:
        Path of the written file
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(HEADER)
        for tick in range(trajectory.n_ticks):
            for vehicle in range(trajectory.n_vehicles):
                writer.writerow(
                    [
                        tick,
                        vehicle,
                        repr(float(trajectory.x[tick, vehicle])),
                        repr(float(trajectory.y[tick, vehicle])),
                    ]
                )
    return path
