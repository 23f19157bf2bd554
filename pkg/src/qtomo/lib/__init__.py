from . import ascent, exceptions, schema, serialization, timer

__all__ = ["ascent", "exceptions", "schema", "serialization", "timer"]
