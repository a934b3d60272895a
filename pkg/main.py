"""
Main entry point for Railway deployment with Railpack.

Railpack detects FastAPI apps in main.py and starts them with uvicorn.
"""

from clifvs.api import app

# Railpack will automatically run: uvicorn main:app
