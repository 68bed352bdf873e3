# Keeps this directory importable so test modules can share helpers
# (see support.py).
