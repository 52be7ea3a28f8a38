"""Generating graphs of finite groups and forbidden-subgraph recognition."""

__version__ = "0.1.0"
