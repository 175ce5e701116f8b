"""
Mapper Logger Configuration
Simple on/off logging system
"""

import logging
import sys


class MapperLogger:
    """Simple mapper logger with debug control"""

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not MapperLogger._initialized:
            self.logger = logging.getLogger("TQCMapper")
            self.logger.setLevel(logging.DEBUG)

            # Console handler
            handler = logging.StreamHandler(sys.stdout)
            handler.setLevel(logging.INFO)  # Default to INFO

            formatter = logging.Formatter("%(levelname)s: %(message)s")
            handler.setFormatter(formatter)

            self.logger.addHandler(handler)
            self.logger.propagate = False
            self.handler = handler

            MapperLogger._initialized = True

    def set_debug_mode(self, enabled):
        """Enable or disable debug logging"""
        if enabled:
            self.handler.setLevel(logging.DEBUG)
            self.logger.debug("🔧 Debug mode enabled")
        else:
            self.handler.setLevel(logging.INFO)

    def set_quiet_mode(self, enabled):
        """Only let warnings and errors through (used by machine-readable commands)"""
        self.handler.setLevel(logging.WARNING if enabled else logging.INFO)

    def get_logger(self):
        """Get the logger instance"""
        return self.logger


# Global logger instance
_mapper_logger = MapperLogger()
logger = _mapper_logger.get_logger()


def set_debug_mode(enabled):
    """Global function to set debug mode"""
    _mapper_logger.set_debug_mode(enabled)


def set_quiet_mode(enabled):
    """Global function to silence INFO output"""
    _mapper_logger.set_quiet_mode(enabled)
