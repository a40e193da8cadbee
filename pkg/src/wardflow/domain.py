"""Core domain types shared by the pipeline, classifiers and simulator."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

#: default cutoff separating short-stay from long-stay admissions
LOS_THRESHOLD_HOURS = 72.0

FeatureValue = Union[float, str, None]


class SchemaError(ValueError):
    """A file or config does not match its declared schema."""


class DataError(ValueError):
    """A data value violates a contract (bad cell, bad row, bad label)."""


class ClassLabel(enum.Enum):
    """Stay class: SS = short stay, LS = long stay (the positive class)."""

    SS = "SS"
    LS = "LS"

    def __repr__(self):  # pragma: no cover - cosmetic
        return f"ClassLabel.{self.name}"


def label_from_los(los_hours: float, threshold_hours: float = LOS_THRESHOLD_HOURS) -> ClassLabel:
    """Label a stay LS when it strictly exceeds the threshold, else SS.

    A stay exactly at the threshold counts as short: "long" means more
    hours than the cutoff.
    """
    if not (los_hours > 0):
        raise DataError(f"los_hours must be positive, got {los_hours!r}")
    if not (threshold_hours > 0):
        raise DataError(f"threshold_hours must be positive, got {threshold_hours!r}")
    return ClassLabel.LS if los_hours > threshold_hours else ClassLabel.SS


@dataclass(frozen=True)
class Encounter:
    """One hospital admission.

    Timestamps are real-valued hours from an arbitrary epoch; calendar
    timestamps are converted at the ingestion boundary.  ``features`` maps a
    feature name to a numeric value, a categorical string, or ``None`` for
    missing.
    """

    encounter_id: str
    patient_hash: str
    triage_time: float
    admit_decision_time: float
    los_hours: float
    features: Mapping[str, FeatureValue] = field(default_factory=dict)

    def __post_init__(self):
        if not math.isfinite(self.triage_time) or not math.isfinite(self.admit_decision_time):
            raise DataError(f"{self.encounter_id}: timestamps must be finite")
        if self.admit_decision_time < self.triage_time:
            raise DataError(
                f"{self.encounter_id}: admit_decision_time {self.admit_decision_time} "
                f"precedes triage_time {self.triage_time}"
            )
        if not (self.los_hours > 0) or not math.isfinite(self.los_hours):
            raise DataError(f"{self.encounter_id}: los_hours must be positive, got {self.los_hours!r}")

    def label(self, threshold_hours: float = LOS_THRESHOLD_HOURS) -> ClassLabel:
        return label_from_los(self.los_hours, threshold_hours)


@dataclass(frozen=True)
class ConfusionCounts:
    """Binary confusion counts with LS as the positive class."""

    tp: int
    tn: int
    fp: int
    fn: int

    def __post_init__(self):
        for name in ("tp", "tn", "fp", "fn"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise DataError(f"confusion count {name} must be a non-negative integer, got {v!r}")

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


class RoutingPolicy(enum.Enum):
    """Bed-assignment discipline used by the simulator.

    Only one policy exists today: waiting predicted-short-stay patients take
    whichever unit frees first, preferring the short stay unit when both are
    available at the same instant.
    """

    SSU_PREFERRED = "ssu-preferred"


def _valid_capacity(v) -> bool:
    return v is None or (isinstance(v, int) and not isinstance(v, bool) and v >= 0)


@dataclass(frozen=True)
class Scenario:
    """Simulation configuration.

    ``None`` capacity means infinite (requests always succeed).  ``horizon``
    of ``None`` means run until the system drains; a number stops the clock
    at that time.
    """

    gw_capacity: Optional[int] = 70
    ssu_capacity: Optional[int] = 10
    transfer_threshold_hours: float = LOS_THRESHOLD_HOURS
    sterilization_min_hours: float = 1.0
    sterilization_max_hours: float = 3.0
    routing_policy: RoutingPolicy = RoutingPolicy.SSU_PREFERRED
    horizon: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if not _valid_capacity(self.gw_capacity):
            raise SchemaError(f"gw_capacity must be a non-negative integer or None, got {self.gw_capacity!r}")
        if not _valid_capacity(self.ssu_capacity):
            raise SchemaError(f"ssu_capacity must be a non-negative integer or None, got {self.ssu_capacity!r}")
        if not (self.transfer_threshold_hours > 0):
            raise SchemaError("transfer_threshold_hours must be positive")
        if not (0 < self.sterilization_min_hours <= self.sterilization_max_hours):
            raise SchemaError("sterilization bounds must satisfy 0 < min <= max")
        if not isinstance(self.routing_policy, RoutingPolicy):
            raise SchemaError(f"unknown routing policy {self.routing_policy!r}")
        if self.horizon is not None and not (math.isfinite(self.horizon) and self.horizon >= 0):
            raise SchemaError("horizon must be a non-negative number or None")

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "gw_capacity": self.gw_capacity,
            "ssu_capacity": self.ssu_capacity,
            "transfer_threshold_hours": self.transfer_threshold_hours,
            "sterilization_min_hours": self.sterilization_min_hours,
            "sterilization_max_hours": self.sterilization_max_hours,
            "routing_policy": self.routing_policy.value,
            "horizon": "drain" if self.horizon is None else self.horizon,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, obj: Mapping, path: str = "scenario") -> "Scenario":
        if not isinstance(obj, Mapping):
            raise SchemaError(f"{path}: expected an object")
        known = {
            "schema_version", "gw_capacity", "ssu_capacity", "transfer_threshold_hours",
            "sterilization_min_hours", "sterilization_max_hours", "routing_policy",
            "horizon", "seed",
        }
        for key in obj:
            if key not in known:
                raise SchemaError(f"{path}.{key}: unknown field")
        version = obj.get("schema_version", 1)
        if version != 1:
            raise SchemaError(f"{path}.schema_version: unsupported version {version!r}")
        kwargs = {}
        for key in ("gw_capacity", "ssu_capacity"):
            if key in obj:
                v = obj[key]
                if isinstance(v, float) and v.is_integer():
                    v = int(v)
                kwargs[key] = v
        for key in ("transfer_threshold_hours", "sterilization_min_hours",
                    "sterilization_max_hours", "seed"):
            if key in obj:
                kwargs[key] = obj[key]
        if "routing_policy" in obj:
            try:
                kwargs["routing_policy"] = RoutingPolicy(obj["routing_policy"])
            except ValueError:
                raise SchemaError(f"{path}.routing_policy: unknown policy {obj['routing_policy']!r}") from None
        if "horizon" in obj:
            h = obj["horizon"]
            kwargs["horizon"] = None if h in (None, "drain") else h
        try:
            return cls(**kwargs)
        except SchemaError as exc:
            raise SchemaError(f"{path}: {exc}") from None
