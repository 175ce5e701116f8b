"""
Run Configuration
Settings of one command-line invocation
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from src.config import MappingConfig


@dataclass(frozen=True)
class RunConfig:
    """
    Attributes:
        command: "map", "verify" or "stats"
        input_path: Geometry document
        output_dir: Where artifacts are written
        sweep_starts: Check sheets from every start vertex
        max_traversals: Override of the sheet-finding bound
        emit_geometry: Also write the point/quad export
        render_dir: Write PNG t-slices here when set
        workers: Thread pool size for per-qubit mapping
        debug: Verbose logging
    """

    command: str
    input_path: Path
    output_dir: Path = Path(".")
    sweep_starts: bool = False
    max_traversals: Optional[int] = None
    emit_geometry: bool = False
    render_dir: Optional[Path] = None
    workers: int = MappingConfig.DEFAULT_WORKERS
    debug: bool = False
