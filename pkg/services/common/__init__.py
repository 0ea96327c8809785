"""
Common utilities shared across the toolkit services.

Holds the error hierarchy and the runtime settings loader; nothing here
depends on another service.
"""

__version__ = "1.0.0"
