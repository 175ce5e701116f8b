"""
Base Command
Abstract base class for command-line commands
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.geometry import CircuitGeometry, parse
from src.logger import logger
from src.mapping import CircuitMapper
from src.mapping_event_handler import MappingEventHandler
from src.systems.events import EventBus
from .run_config import RunConfig

# Exit statuses
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2


class BaseCommand(ABC):
    """Base class for all commands"""

    name = ""

    def __init__(self):
        self.event_bus = EventBus()
        self.event_handler = MappingEventHandler(self.event_bus)

    @abstractmethod
    def run(self, config: RunConfig) -> int:
        """
        Execute the command

        Args:
            config: Parsed command-line settings

        Returns:
            int: Process exit status
        """
        pass

    # ==================== SHARED STEPS ====================

    def load(self, config: RunConfig) -> CircuitGeometry:
        """Read and parse the geometry document"""
        text = Path(config.input_path).read_text(encoding="utf-8")
        circuit = parse(text)
        logger.info(f"📂 Loaded {config.input_path}: {len(circuit.qubits)} logical qubit(s)")
        return circuit

    def map(self, config: RunConfig, circuit: CircuitGeometry):
        mapper = CircuitMapper(
            bus=self.event_bus,
            workers=config.workers,
            max_traversals=config.max_traversals,
            sweep_starts=config.sweep_starts,
        )
        return mapper.map_circuit(circuit)

    def write(self, config: RunConfig, file_name: str, text: str) -> Path:
        output_dir = Path(config.output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        path = output_dir / file_name
        path.write_text(text)
        logger.info(f"💾 Wrote {path}")
        return path
