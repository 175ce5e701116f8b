"""
Map Command
Writes the instruction stream and the tracking document
"""

from src.config import OutputConfig
from src.emitters import emit_instructions, emit_tracking, export_geometry
from src.rendering import LatticeRenderer
from .base_command import EXIT_OK, BaseCommand
from .run_config import RunConfig


class MapCommand(BaseCommand):
    """Geometry in, measurement instructions and tracking sets out"""

    name = "map"

    def run(self, config: RunConfig) -> int:
        circuit = self.load(config)
        mapped = self.map(config, circuit)
        tuples = [m.qubit_tuple for m in mapped]

        self.write(config, OutputConfig.INSTRUCTIONS_FILE, emit_instructions(circuit.lattice, tuples))
        self.write(config, OutputConfig.TRACKING_FILE, emit_tracking(tuples))
        if config.emit_geometry:
            self.write(config, OutputConfig.GEOMETRY_FILE, export_geometry(mapped))
        if config.render_dir is not None:
            LatticeRenderer(circuit.lattice).render(tuples, config.render_dir)
        return EXIT_OK
