"""
Mapping Event Handler
Centralizes pipeline event subscriptions: trace logging and per-qubit counters
"""

from collections import Counter, defaultdict

from src.logger import logger
from src.systems.events import EventBus, MappingEvent


class MappingEventHandler:
    """
    Subscribes trace logging and rule counters to a mapping event bus
    """

    def __init__(self, event_bus: EventBus):
        """
        Args:
            event_bus: Bus the mapper publishes on
        """
        self.event_bus = event_bus
        self.counters = defaultdict(Counter)  # {qubit_id: Counter(rule -> count)}
        self.failures = []
        self._setup_listeners()

    def _setup_listeners(self):
        """Subscribe to all mapping events"""

        # ==================== REWRITE EVENTS ====================
        self.event_bus.subscribe(MappingEvent.REDUCE_APPLIED, self._on_rewrite("reduce"))
        self.event_bus.subscribe(MappingEvent.RESHAPE_APPLIED, self._on_rewrite("reshape"))
        self.event_bus.subscribe(MappingEvent.VERTEX_REMOVED, self._on_rewrite("remove"))
        self.event_bus.subscribe(MappingEvent.SUBSHEET_FOUND, self._on_subsheet_found)
        self.event_bus.subscribe(MappingEvent.TRAVERSAL_COMPLETED, self._on_traversal_completed)

        # ==================== RESULT EVENTS ====================
        self.event_bus.subscribe(MappingEvent.QUBIT_MAPPED, self._on_qubit_mapped)
        self.event_bus.subscribe(MappingEvent.SURFACE_VERIFIED, self._on_surface_verified)

        logger.debug("✅ Mapping event handlers registered")

    # ==================== REWRITE EVENT HANDLERS ====================

    def _on_rewrite(self, rule: str):
        def handler(event):
            self.counters[event.qubit_id][rule] += 1

        return handler

    def _on_subsheet_found(self, event):
        self.counters[event.qubit_id]["subsheets"] += 1
        if not event.subsheet.is_degenerate:
            self.counters[event.qubit_id]["area_subsheets"] += 1

    def _on_traversal_completed(self, event):
        self.counters[event.qubit_id]["traversals"] += 1

    # ==================== RESULT EVENT HANDLERS ====================

    def _on_qubit_mapped(self, event):
        counts = self.counters[event.qubit_id]
        logger.debug(
            f"📊 Qubit {event.qubit_id}: {counts['reduce']} reduce, {counts['reshape']} reshape, "
            f"{counts['remove']} remove, {counts['area_subsheets']} area sub-sheets"
        )

    def _on_surface_verified(self, event):
        if not event.report.passed:
            self.failures.append(event.report)
            logger.warning(f"❌ {event.report}")
