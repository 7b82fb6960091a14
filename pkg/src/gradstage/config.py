"""key = value config files mirroring EngineConfig."""

from __future__ import annotations

from pathlib import Path

from .performance import EngineConfig

_INT_FIELDS = {"split_note", "chord_min_size", "overtone_count", "seed"}
_FLOAT_FIELDS = {"chord_window_ms", "alpha", "steps_per_second_held", "distortion_gain"}


class ConfigError(ValueError):
    pass


def parse_config(text: str, base: EngineConfig | None = None) -> EngineConfig:
    """Parse `key = value` lines ('#' comments) over a base config."""
    values: dict[str, int | float] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"line {line_no}: expected key = value, got {raw!r}")
        if key in _INT_FIELDS:
            converter: type[int] | type[float] = int
        elif key in _FLOAT_FIELDS:
            converter = float
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        try:
            values[key] = converter(value)
        except ValueError:
            raise ConfigError(f"line {line_no}: bad value for {key}: {value!r}") from None
    base_values = (base or EngineConfig()).__dict__ | values
    try:
        return EngineConfig(**base_values)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | Path, base: EngineConfig | None = None) -> EngineConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"), base)
