"""Tests for bibracket."""
