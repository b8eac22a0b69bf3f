"""
Logging utility module for the synthesis toolkit.

Provides consistent logging configuration across all modules. Records go
to stderr so command output on stdout stays byte-stable.

Example:
    from utils.logger import get_logger
    logger = get_logger(__name__)
    logger.info("Arena built")
"""

import logging
from typing import Optional

from config import LOG_CONFIG


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a configured logger instance.
    
    Args:
        name: Optional name for the logger
        
    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name or __name__)
    
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_CONFIG['format']))
        logger.addHandler(handler)
        logger.setLevel(getattr(logging, LOG_CONFIG['level'].upper(), logging.INFO))
    
    return logger
