"""Builds the optional compiled kernels.

The package works without them (a pure-Python mirror is selected at
import when the extension is absent), so any failure here downgrades
to a source-only install instead of aborting.
"""

import sys

from setuptools import setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython unavailable; installing with pure-Python kernels",
              file=sys.stderr)
        return []
    try:
        return cythonize(
            ["src/lrcmat/_kernels/_fast.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # noqa: BLE001 - any build problem means "skip"
        print(f"kernel build skipped ({exc}); using pure-Python kernels",
              file=sys.stderr)
        return []


setup(ext_modules=extensions())
