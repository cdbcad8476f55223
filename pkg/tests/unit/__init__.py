"""Unit tests for ALGCOEF packages."""
