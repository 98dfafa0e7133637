import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

# -ffp-contract=off: the evaluators promise bitwise-reproducible sums; fused
# multiply-adds would make results depend on the compiler's contraction
# choices.
ext = Pybind11Extension(
    "lowdisc._lowdisc",
    sources=sorted(glob.glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include"],
    cxx_std=20,
    extra_compile_args=["-O3", "-ffp-contract=off"],
)

ParallelCompile("LOWDISC_BUILD_JOBS", default=0).install()

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
