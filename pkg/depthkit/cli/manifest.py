"""Run manifests: what produced an output, sufficient to reproduce it."""

from __future__ import annotations

import hashlib
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from depthkit import RNG_ALGORITHM, __version__


def file_digest(path: Path) -> str:
    """SHA-256 of a file's bytes, hex encoded."""
    with path.open("rb") as f:
        return hashlib.file_digest(f, "sha256").hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """Command, parameters, seed and input digests of one run.

    The manifest holds no timestamps or host details, so re-running the same
    command on the same inputs reproduces it byte for byte.
    """

    command: str
    parameters: Mapping[str, object]
    seed: int
    inputs: Mapping[str, str] = field(default_factory=dict)
    version: str = __version__
    rng: str = RNG_ALGORITHM

    @classmethod
    def for_inputs(
        cls,
        command: str,
        parameters: Mapping[str, object],
        seed: int,
        paths: Mapping[str, Path | None],
    ) -> RunManifest:
        """Manifest with digests of every given (non-None) input file."""
        inputs = {name: file_digest(path) for name, path in paths.items() if path is not None}
        return cls(command, dict(parameters), seed, inputs)

    def to_dict(self) -> dict[str, object]:
        """JSON-ready form."""
        return {
            "command": self.command,
            "parameters": dict(self.parameters),
            "seed": self.seed,
            "inputs": dict(self.inputs),
            "version": self.version,
            "rng": self.rng,
        }
