"""
Topological Circuit Mapper - Main Entry Point
Maps defect geometries onto a 3D cluster lattice
"""

import argparse
import sys
from pathlib import Path

from src.command_registry import register_all_commands
from src.commands import EXIT_INVALID, RunConfig
from src.config import MappingConfig
from src.errors import GeometryParseError, MappingError
from src.factories import CommandFactory
from src.logger import logger, set_debug_mode, set_quiet_mode

# Commands whose stdout is machine-read
QUIET_COMMANDS = ("verify", "stats")


def build_parser() -> argparse.ArgumentParser:
    """Command-line interface"""
    parser = argparse.ArgumentParser(
        prog="tqc-mapper",
        description="Map topological quantum circuit geometries onto a 3D cluster lattice",
    )
    parser.add_argument("command", choices=CommandFactory.get_available_commands(), help="what to do")
    parser.add_argument("input", type=Path, help="geometry document")
    parser.add_argument("-o", "--output-dir", type=Path, default=Path("."), help="artifact directory")
    parser.add_argument(
        "--sweep-starts",
        action="store_true",
        help="run sheet finding from every start vertex and require equivalent sheets",
    )
    parser.add_argument("--max-traversals", type=int, default=None, help="sheet-finding safety bound")
    parser.add_argument("--emit-geometry", action="store_true", help="also write a point/quad export")
    parser.add_argument("--render", type=Path, default=None, metavar="DIR", help="write PNG t-slices to DIR")
    parser.add_argument(
        "--workers", type=int, default=MappingConfig.DEFAULT_WORKERS, help="logical qubits mapped in parallel"
    )
    parser.add_argument("--debug", action="store_true", help="verbose logging")
    return parser


def run(argv=None) -> int:
    """
    Parse arguments, dispatch the command and translate errors to exit codes

    Returns:
        0 on success, 1 on invalid input, 2 on failed verification
    """
    register_all_commands()
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        output_dir=args.output_dir,
        sweep_starts=args.sweep_starts,
        max_traversals=args.max_traversals,
        emit_geometry=args.emit_geometry,
        render_dir=args.render,
        workers=args.workers,
        debug=args.debug,
    )
    set_quiet_mode(config.command in QUIET_COMMANDS)
    if config.debug:
        set_debug_mode(True)

    try:
        return CommandFactory.create(config.command).run(config)
    except GeometryParseError as e:
        print(f"{config.input_path}:{e.line}:{e.column}: {e.message}", file=sys.stderr)
    except MappingError as e:
        print(f"{config.input_path}: {e}", file=sys.stderr)
    except UnicodeDecodeError as e:
        print(f"{config.input_path}: not UTF-8 at byte {e.start}", file=sys.stderr)
    except OSError as e:
        print(f"{config.input_path}: {e.strerror or e}", file=sys.stderr)
    logger.debug("Run aborted")
    return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
