from glob import glob

from setuptools import find_packages, setup

from gmc import meta, version


setup(
    name=meta.display_name,
    version=version.gmc,
    description="Monoidal categories graded by partial commutative monoids",
    author=meta.author,
    author_email=meta.author_email,
    url=meta.url,
    license=meta.license,
    packages=find_packages(include=["gmc", "gmc.*"]),
    scripts=glob("./bin/*"),
    long_description=meta.description,
    install_requires=["twisted", "venusian", "lark>=1.0"],
    extras_require={"test": ["hypothesis"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
       ],
    )
