"""
Stats Command
Prints per-qubit rewrite counters and set sizes
"""

from .base_command import EXIT_OK, BaseCommand
from .run_config import RunConfig

COLUMNS = (
    "qubit", "layer", "|K|", "traversals", "reshapes", "max_consec",
    "reduces", "removes", "|D|", "|I|", "|O|", "|J|", "|sheet|", "|tube|",
)


def format_table(rows) -> str:
    """Right-aligned plain-text table with a header row"""
    table = [COLUMNS] + [tuple(str(value) for value in row) for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(COLUMNS))]
    return "".join("  ".join(cell.rjust(width) for cell, width in zip(row, widths)) + "\n" for row in table)


class StatsCommand(BaseCommand):
    """Rewrite statistics without writing artifacts"""

    name = "stats"

    def run(self, config: RunConfig) -> int:
        circuit = self.load(config)
        rows = []
        for mapped in self.map(config, circuit):
            result, qubit_tuple = mapped.sheet_result, mapped.qubit_tuple
            rows.append((
                mapped.qubit_id,
                qubit_tuple.layer.value,
                result.initial_size,
                result.traversals,
                result.reshapes,
                result.max_consecutive_reshapes,
                result.reduces,
                result.removes,
                len(qubit_tuple.D),
                len(qubit_tuple.I),
                len(qubit_tuple.O),
                len(qubit_tuple.J),
                len(qubit_tuple.sheet),
                len(qubit_tuple.tube),
            ))
        print(format_table(rows), end="")
        return EXIT_OK
