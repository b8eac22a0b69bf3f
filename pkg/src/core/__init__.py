"""Core synthesis components: models, languages, conditions, games, supervisors."""
