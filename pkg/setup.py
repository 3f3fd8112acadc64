import os

from setuptools import setup

# The compiled kernel is optional: kickplan falls back to the pure-Python
# twin when the extension is absent. Set KICKPLAN_NO_EXT=1 to skip the build.
ext_modules = []
if not os.environ.get("KICKPLAN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            "src/kickplan/_integrate.pyx",
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
