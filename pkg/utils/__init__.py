"""
Utility functions for the Dirac oscillator verifier.
"""
