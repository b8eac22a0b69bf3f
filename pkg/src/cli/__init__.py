"""Command-line front end (``rdes``)."""
