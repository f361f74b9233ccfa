"""
Report models and writers for verification and spectrum runs.
"""
