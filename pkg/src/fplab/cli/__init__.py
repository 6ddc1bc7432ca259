"""Command-line front end: one JSON config per job, JSONL records out."""
