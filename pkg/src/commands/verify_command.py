"""
Verify Command
Maps a circuit and checks every surface with the stabilizer oracle
"""

from src.config import OutputConfig
from src.logger import logger
from src.verification import verify_circuit
from .base_command import EXIT_OK, EXIT_VERIFY_FAILED, BaseCommand
from .run_config import RunConfig


class VerifyCommand(BaseCommand):
    """Exit 0 iff every check passes"""

    name = "verify"

    def run(self, config: RunConfig) -> int:
        circuit = self.load(config)
        mapped = self.map(config, circuit)
        reports = verify_circuit([m.qubit_tuple for m in mapped], circuit.lattice, self.event_bus)

        text = "".join(f"{report}\n" for report in reports)
        print(text, end="")
        self.write(config, OutputConfig.REPORT_FILE, text)

        failed = [report for report in reports if not report.passed]
        if failed:
            logger.error(f"❌ {len(failed)} of {len(reports)} checks failed")
            return EXIT_VERIFY_FAILED
        logger.info(f"✅ All {len(reports)} checks passed")
        return EXIT_OK
