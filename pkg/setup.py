"""Build script: compiles the optional _fastcore extension.

The package works without it (the pure-Python backend is selected at
import time), so a missing compiler or Cython only costs speed.  Set
HULLFORGE_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HULLFORGE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hullforge._fastcore", ["src/hullforge/_fastcore.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("Cython not available; building hullforge without the "
              "compiled kernel backend")

setup(ext_modules=ext_modules)
