"""
Verification suites that turn symbolic and numeric results into check records.
"""
