"""Coordinate frames, trajectory containers and the world/hazard-centric transforms.

Conventions used throughout the package: +y is the road travel direction,
+x points to the driver's left, and x = 0 is the ego lane center. Headings
are measured from the +y axis toward +x, so a heading of 0 means "driving
straight down the road". ``road_heading`` is the travel direction of the
road segment expressed the same way in world coordinates; 0 means the world
frame is already road-aligned.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedCsv, OffRoad, WrongFrameKind

TWO_PI = 2.0 * math.pi

TRAJECTORY_CSV_COLUMNS = ("t", "x", "y", "heading", "vx", "vy")


def wrap_angle(a: float) -> float:
    """Normalize an angle to the half-open interval (-pi, pi]."""
    r = math.fmod(a + math.pi, TWO_PI)
    if r <= 0.0:
        r += TWO_PI
    return r - math.pi


class FrameKind(Enum):
    WORLD = "world"
    HAZARD_CENTRIC = "hazard_centric"


class SizeClass(Enum):
    MODERATE = "Moderate"
    LARGE = "Large"


class ClosenessClass(Enum):
    NEAR = "Near"
    FAR = "Far"


class Traffic(Enum):
    UNIDIRECTIONAL = "Uni"
    BIDIRECTIONAL = "Bi"


@dataclass(frozen=True)
class Frame:
    """One timestamped ego-state sample."""

    t: float
    x: float
    y: float
    heading: float
    vx: float
    vy: float

    @property
    def speed(self) -> float:
        return math.hypot(self.vx, self.vy)


@dataclass(frozen=True)
class Trajectory:
    """Ordered ego-state samples in a single coordinate frame.

    At least two frames, timestamps strictly increasing.
    """

    frames: tuple[Frame, ...]
    kind: FrameKind = FrameKind.WORLD

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))
        if len(self.frames) < 2:
            raise ValueError("trajectory needs at least 2 frames")
        ts = [f.t for f in self.frames]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValueError("frame timestamps must strictly increase")

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def ys(self) -> np.ndarray:
        return np.array([f.y for f in self.frames])

    @property
    def xs(self) -> np.ndarray:
        return np.array([f.x for f in self.frames])

    @property
    def speeds(self) -> np.ndarray:
        return np.hypot([f.vx for f in self.frames], [f.vy for f in self.frames])


@dataclass(frozen=True)
class HazardDescriptor:
    """A parked-vehicle hazard: world-frame footprint plus its scenario classes."""

    center_x: float
    center_y: float
    length: float  # along y
    width: float  # along x
    size_class: SizeClass = SizeClass.MODERATE
    closeness_class: ClosenessClass = ClosenessClass.NEAR

    def __post_init__(self):
        if self.length <= 0 or self.width <= 0:
            raise ValueError("hazard footprint must have positive extent")

    @property
    def y_min(self) -> float:
        return self.center_y - self.length / 2.0

    @property
    def y_max(self) -> float:
        return self.center_y + self.length / 2.0

    @property
    def x_min(self) -> float:
        return self.center_x - self.width / 2.0

    @property
    def x_max(self) -> float:
        return self.center_x + self.width / 2.0


@dataclass(frozen=True)
class RoadSpec:
    """Drivable-surface geometry; lateral limits are relative to the ego lane center."""

    lane_width: float
    traffic: Traffic
    left_limit: float
    right_limit: float
    sub_lane_width: float = 0.2

    def __post_init__(self):
        if self.sub_lane_width <= 0:
            raise ValueError("sub_lane_width must be positive")
        if self.left_limit <= self.right_limit:
            raise ValueError("left_limit must exceed right_limit")

    @property
    def own_lane_allowance(self) -> float:
        """Leftmost lateral offset usable without entering an opposing lane."""
        if self.traffic is Traffic.BIDIRECTIONAL:
            return min(self.left_limit, self.lane_width / 2.0)
        return self.left_limit

    def contains(self, x_offset: float) -> bool:
        return self.right_limit <= x_offset <= self.left_limit


@dataclass(frozen=True)
class ScenarioLabel:
    """One of the 8 size x closeness x traffic scenario identities."""

    size_class: SizeClass
    closeness_class: ClosenessClass
    traffic: Traffic

    def short(self) -> str:
        return f"{self.traffic.value}/{self.size_class.value}/{self.closeness_class.value}"


def all_scenario_labels() -> tuple[ScenarioLabel, ...]:
    return tuple(
        ScenarioLabel(s, c, t)
        for t in Traffic
        for s in SizeClass
        for c in ClosenessClass
    )


# -- transforms ---------------------------------------------------------------


def _rotate(x: float, y: float, theta: float) -> tuple[float, float]:
    c, s = math.cos(theta), math.sin(theta)
    return c * x - s * y, s * x + c * y


def to_hazard_centric(
    traj: Trajectory, hazard: HazardDescriptor, road_heading: float = 0.0
) -> Trajectory:
    """Re-express a world-frame trajectory relative to the hazard center.

    The hazard center becomes the origin and the road travel direction
    becomes +y; velocities and headings are rotated identically.
    """
    if traj.kind is not FrameKind.WORLD:
        raise WrongFrameKind("expected a world-frame trajectory")
    frames = []
    for f in traj.frames:
        x, y = _rotate(f.x - hazard.center_x, f.y - hazard.center_y, road_heading)
        vx, vy = _rotate(f.vx, f.vy, road_heading)
        frames.append(
            Frame(f.t, x, y, wrap_angle(f.heading - road_heading), vx, vy)
        )
    return Trajectory(tuple(frames), FrameKind.HAZARD_CENTRIC)


def from_hazard_centric(
    traj: Trajectory, hazard: HazardDescriptor, road_heading: float = 0.0
) -> Trajectory:
    """Exact inverse of :func:`to_hazard_centric`."""
    if traj.kind is not FrameKind.HAZARD_CENTRIC:
        raise WrongFrameKind("expected a hazard-centric trajectory")
    frames = []
    for f in traj.frames:
        x, y = _rotate(f.x, f.y, -road_heading)
        vx, vy = _rotate(f.vx, f.vy, -road_heading)
        frames.append(
            Frame(
                f.t,
                x + hazard.center_x,
                y + hazard.center_y,
                wrap_angle(f.heading + road_heading),
                vx,
                vy,
            )
        )
    return Trajectory(tuple(frames), FrameKind.WORLD)


def sub_lane_index(x_offset: float, road: RoadSpec) -> int:
    """Discretize a lateral offset into the road's 0.2 m sub-lane strips.

    Strip 0 starts at the right road limit.
    """
    if not road.contains(x_offset):
        raise OffRoad(
            f"x_offset {x_offset:.3f} outside [{road.right_limit:.3f}, {road.left_limit:.3f}]"
        )
    return int(math.floor((x_offset - road.right_limit) / road.sub_lane_width))


# -- trajectory CSV -----------------------------------------------------------


def read_trajectory_csv(path) -> Trajectory:
    """Load a world-frame trajectory from CSV with columns t,x,y,heading,vx,vy."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise MalformedCsv("empty trajectory file")
        missing = [c for c in TRAJECTORY_CSV_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise MalformedCsv(
                f"missing column '{missing[0]}'", row=0, column=missing[0]
            )
        frames = []
        for i, record in enumerate(reader, start=1):
            values = {}
            for col in TRAJECTORY_CSV_COLUMNS:
                raw = record.get(col)
                if raw is None or raw == "":
                    raise MalformedCsv(f"row {i}: missing value for '{col}'", row=i, column=col)
                try:
                    values[col] = float(raw)
                except ValueError:
                    raise MalformedCsv(
                        f"row {i}: column '{col}' is not a number: {raw!r}",
                        row=i,
                        column=col,
                    ) from None
            frames.append(Frame(**values))
    if len(frames) < 2:
        raise MalformedCsv("trajectory needs at least 2 rows")
    try:
        return Trajectory(tuple(frames), FrameKind.WORLD)
    except ValueError as exc:
        raise MalformedCsv(str(exc)) from None


def write_trajectory_csv(traj: Trajectory, path) -> None:
    """Write a trajectory as CSV; floats use shortest round-trip formatting."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRAJECTORY_CSV_COLUMNS)
        for f in traj.frames:
            writer.writerow([repr(v) for v in (f.t, f.x, f.y, f.heading, f.vx, f.vy)])
