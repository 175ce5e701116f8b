"""
Event System
Publish/subscribe bus connecting mapping stages to observers
"""

from .event_bus import EventBus
from .event_types import MappingEvent, EventData

__all__ = [
    "EventBus",
    "MappingEvent",
    "EventData",
]
