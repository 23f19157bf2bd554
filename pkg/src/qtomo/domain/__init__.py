"""Incomplete qutrit tomography: prior data, the permissible region, estimators, metrics and the benchmark."""
