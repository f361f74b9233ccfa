"""
Report components for the Dirac oscillator verifier.
"""
