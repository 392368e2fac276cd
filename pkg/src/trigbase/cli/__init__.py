"""CLI interface for trigbase."""
