"""
Event Bus
Publish/subscribe channel between mapping stages and their observers
Qubits are mapped on worker threads, so emission is serialized by a lock
"""

import threading
from collections import defaultdict
from typing import Callable, Dict, List

from src.logger import logger
from .event_types import EventData, create_event_data


class EventBus:
    """
    Central event bus for the mapping pipeline

    Usage:
        bus.subscribe(MappingEvent.SUBSHEET_FOUND, on_subsheet)
        bus.emit(MappingEvent.SUBSHEET_FOUND, qubit_id="1", subsheet=ss, rule="reduce")
    """

    def __init__(self, max_history: int = 100):
        """
        Args:
            max_history: Number of recent events kept for debugging
        """
        self._subscribers: Dict[str, List[Callable]] = defaultdict(list)
        self._once_subscribers: Dict[str, List[Callable]] = defaultdict(list)
        self._event_history: List[tuple] = []
        self._max_history = max_history
        self._lock = threading.RLock()
        self._stats = {"total_emits": 0, "total_subscriptions": 0}

    # ==================== SUBSCRIPTION ====================

    def subscribe(self, event_type: str, callback: Callable) -> Callable:
        """
        Subscribe to an event type

        Args:
            event_type: Event type to listen for
            callback: Called as callback(event_data) or callback()

        Returns:
            Unsubscribe function
        """
        with self._lock:
            self._subscribers[event_type].append(callback)
            self._stats["total_subscriptions"] += 1

        def unsubscribe():
            self.unsubscribe(event_type, callback)

        return unsubscribe

    def subscribe_once(self, event_type: str, callback: Callable) -> Callable:
        """Subscribe for the next emission of event_type only"""
        with self._lock:
            self._once_subscribers[event_type].append(callback)

        def unsubscribe():
            with self._lock:
                if callback in self._once_subscribers[event_type]:
                    self._once_subscribers[event_type].remove(callback)

        return unsubscribe

    def unsubscribe(self, event_type: str, callback: Callable):
        with self._lock:
            if callback in self._subscribers[event_type]:
                self._subscribers[event_type].remove(callback)

    def unsubscribe_all(self, event_type: str = None):
        """Drop every callback, or only those of event_type"""
        with self._lock:
            if event_type:
                self._subscribers[event_type].clear()
                self._once_subscribers[event_type].clear()
            else:
                self._subscribers.clear()
                self._once_subscribers.clear()

    # ==================== EMISSION ====================

    def emit(self, event_type: str, **kwargs):
        """
        Emit an event to all subscribers

        Args:
            event_type: MappingEvent constant
            **kwargs: Event payload
        """
        event_data = create_event_data(event_type, **kwargs)
        with self._lock:
            self._stats["total_emits"] += 1
            self._add_to_history(event_type, event_data)
            callbacks = self._subscribers[event_type][:]
            once = self._once_subscribers[event_type][:]
            self._once_subscribers[event_type].clear()
            for callback in callbacks + once:
                self._safe_call(callback, event_data)

    def _safe_call(self, callback: Callable, event_data: EventData):
        """Observer failures are logged, never propagated into the mapper"""
        try:
            callback(event_data)
        except TypeError:
            try:
                callback()
            except Exception as e:
                logger.warning(f"⚠️ Event callback error: {e}")
        except Exception as e:
            logger.warning(f"⚠️ Event callback error: {e}")

    # ==================== HISTORY & DEBUG ====================

    def _add_to_history(self, event_type: str, event_data: EventData):
        self._event_history.append((event_type, event_data))
        if len(self._event_history) > self._max_history:
            self._event_history = self._event_history[-self._max_history :]

    def get_history(self, event_type: str = None, limit: int = 10) -> List[tuple]:
        """
        Recent (event_type, event_data) pairs

        Args:
            event_type: Filter by event type (None = all events)
            limit: Max number of events to return
        """
        with self._lock:
            history = self._event_history
            if event_type:
                history = [h for h in history if h[0] == event_type]
            return history[-limit:]

    def get_stats(self) -> dict:
        with self._lock:
            return {
                **self._stats,
                "active_subscriptions": sum(len(subs) for subs in self._subscribers.values()),
                "event_types": len(self._subscribers),
            }

    def reset(self):
        """Forget subscribers, history and counters"""
        with self._lock:
            self.unsubscribe_all()
            self._event_history.clear()
            self._stats = {"total_emits": 0, "total_subscriptions": 0}
