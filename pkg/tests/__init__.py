"""Graded quiver algebras test suite.

Test Structure:
- unit/services/<service>/: one directory per service
- slow-marked tests sweep larger r and run with `pytest -m slow`
"""

__version__ = "0.1.0"
