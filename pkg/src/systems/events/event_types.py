"""
Event Types
Mapping pipeline events and their payloads
"""


class MappingEvent:
    """Mapping event type constants"""

    # ==================== INPUT EVENTS ====================
    QUBIT_PARSED = "qubit_parsed"
    GRAPH_BUILT = "graph_built"

    # ==================== TUBE EVENTS ====================
    TUBES_MAPPED = "tubes_mapped"

    # ==================== REWRITE EVENTS ====================
    VERTEX_REMOVED = "vertex_removed"
    REDUCE_APPLIED = "reduce_applied"
    RESHAPE_APPLIED = "reshape_applied"
    SUBSHEET_FOUND = "subsheet_found"
    TRAVERSAL_COMPLETED = "traversal_completed"

    # ==================== RESULT EVENTS ====================
    SHEET_ASSEMBLED = "sheet_assembled"
    QUBIT_MAPPED = "qubit_mapped"
    SURFACE_VERIFIED = "surface_verified"


# ==================== EVENT DATA CLASSES ====================


class EventData:
    """Base class for event data"""

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def __repr__(self):
        attrs = ", ".join(f"{k}={v}" for k, v in self.__dict__.items())
        return f"{self.__class__.__name__}({attrs})"


class RewriteEvent(EventData):
    """
    Data for REDUCE_APPLIED / RESHAPE_APPLIED / VERTEX_REMOVED

    Attributes:
        qubit_id: Logical qubit being rewritten
        coords: Coordinates of the vertices the rule acted on
        size: Vertex count after the rule
    """

    pass


class SubSheetFoundEvent(EventData):
    """
    Data for SUBSHEET_FOUND

    Attributes:
        qubit_id: Logical qubit
        subsheet: Recorded SubSheet
        rule: "reduce" or "reshape"
    """

    pass


class TraversalEvent(EventData):
    """
    Data for TRAVERSAL_COMPLETED

    Attributes:
        qubit_id: Logical qubit
        traversal: 1-based traversal number
        size: Vertex count at the end of the traversal
        compact: Whether any rule fired during the traversal
    """

    pass


class QubitMappedEvent(EventData):
    """
    Data for QUBIT_MAPPED

    Attributes:
        qubit_id: Logical qubit
        qubit_tuple: Finished QubitTuple
        stats: SheetFindingResult of the run
    """

    pass


class SurfaceVerifiedEvent(EventData):
    """
    Data for SURFACE_VERIFIED

    Attributes:
        report: SurfaceReport produced by the verifier
    """

    pass


# ==================== HELPER FUNCTIONS ====================


def create_event_data(event_type, **kwargs):
    """
    Create the EventData subclass registered for an event type

    Args:
        event_type: MappingEvent constant
        **kwargs: Event data

    Returns:
        EventData instance
    """
    event_classes = {
        MappingEvent.REDUCE_APPLIED: RewriteEvent,
        MappingEvent.RESHAPE_APPLIED: RewriteEvent,
        MappingEvent.VERTEX_REMOVED: RewriteEvent,
        MappingEvent.SUBSHEET_FOUND: SubSheetFoundEvent,
        MappingEvent.TRAVERSAL_COMPLETED: TraversalEvent,
        MappingEvent.QUBIT_MAPPED: QubitMappedEvent,
        MappingEvent.SURFACE_VERIFIED: SurfaceVerifiedEvent,
    }

    event_class = event_classes.get(event_type, EventData)
    return event_class(**kwargs)
