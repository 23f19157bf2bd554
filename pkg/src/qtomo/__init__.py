"""Point estimators and benchmarks for qutrit incomplete tomography."""

import multiprocessing
import platform

# benchmark worker pools
if platform.system() == "Darwin":
    multiprocessing.set_start_method("fork", force=True)
