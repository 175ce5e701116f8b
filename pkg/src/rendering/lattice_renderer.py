"""
Lattice Renderer
Draws one PNG per t-layer of the lattice with mapped qubit sets coloured
Works on off-screen surfaces; no display is opened
"""

from pathlib import Path
from typing import Dict, List

import pygame

from src.config import Colors, OutputConfig, RenderConfig
from src.lattice import Coord, LatticeSpec
from src.logger import logger


class LatticeRenderer:
    """Renders t-slices of a mapped lattice"""

    def __init__(self, lattice: LatticeSpec, cell_pixels: int = RenderConfig.CELL_PIXELS):
        """
        Args:
            lattice: Lattice to draw
            cell_pixels: Pixels per lattice position
        """
        self.lattice = lattice
        self.cell_pixels = cell_pixels
        self.margin = RenderConfig.MARGIN
        extent = lattice.extent
        self.size = (
            extent.w * cell_pixels + 2 * self.margin,
            extent.h * cell_pixels + 2 * self.margin,
        )

    def colour_map(self, qubit_tuples) -> Dict[Coord, tuple]:
        """Colour per coordinate; later entries win (injection on top)"""
        colours: Dict[Coord, tuple] = {}
        layers = [
            ("tube", Colors.TUBE),
            ("sheet", Colors.SHEET),
            ("I", Colors.LOGIC_OPERATOR),
            ("O", Colors.LOGIC_OPERATOR),
            ("D", Colors.DEFECT),
        ]
        for name, colour in layers:
            for qubit_tuple in qubit_tuples:
                for coord in getattr(qubit_tuple, name):
                    colours[coord] = colour
        for qubit_tuple in qubit_tuples:
            for coord in qubit_tuple.injections.values():
                colours[coord] = Colors.INJECTION
        return colours

    def render_slice(self, t: int, colours: Dict[Coord, tuple]) -> pygame.Surface:
        """Draw the layer at time t"""
        surface = pygame.Surface(self.size)
        surface.fill(Colors.BACKGROUND)
        extent = self.lattice.extent
        radius = max(1, int(self.cell_pixels * RenderConfig.DOT_RATIO))

        for h in range(extent.h):
            for w in range(extent.w):
                coord = Coord(w, h, t)
                x = self.margin + w * self.cell_pixels + self.cell_pixels // 2
                y = self.margin + (extent.h - 1 - h) * self.cell_pixels + self.cell_pixels // 2
                if coord.even_count() in (0, 3):
                    pygame.draw.rect(surface, Colors.CELL_CENTER, (x - 1, y - 1, 3, 3))
                else:
                    pygame.draw.circle(surface, colours.get(coord, Colors.PLAIN_QUBIT), (x, y), radius)
        return surface

    def render(self, qubit_tuples, output_dir) -> List[Path]:
        """
        Write one PNG per t-layer

        Returns:
            Paths of the written images in t order
        """
        output_dir = Path(output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        colours = self.colour_map(list(qubit_tuples))

        paths = []
        for t in range(self.lattice.extent.t):
            path = output_dir / OutputConfig.RENDER_PATTERN.format(t=t)
            pygame.image.save(self.render_slice(t, colours), str(path))
            paths.append(path)
        logger.info(f"🖼️ Rendered {len(paths)} slices to {output_dir}")
        return paths
