import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = sorted(s for s in glob.glob("src/*.cpp") if not s.endswith("main.cpp"))

setup(
    ext_modules=[
        Pybind11Extension(
            "quadlag_py",
            sources,
            include_dirs=["include", "vendor"],
            libraries=["gmpxx", "gmp"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
