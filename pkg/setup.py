"""Build script: compiles the optional Cython core if Cython is available.

The package is fully functional without the extension; eistrace.exact falls
back to the pure-Python kernels in eistrace._core_py.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("eistrace._core", ["src/eistrace/_core.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"Cython core not built ({exc}); using pure-Python kernels")

setup(ext_modules=ext_modules)
