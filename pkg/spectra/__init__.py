"""
Numeric spectra of the extracted Dirac-oscillator Hamiltonians.
"""