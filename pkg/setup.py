#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup
from lclbench import __version__

install_requires = [r for r in open("requirements.txt").read().split('\n') if r]
readme_content = open("README.md").read()

def gen_data_files(package_dir, subdir):
    import os.path
    results = []
    for root, dirs, files in os.walk(os.path.join(package_dir, subdir)):  # @UnusedVariable
        results.extend([os.path.join(root, f)[len(package_dir)+1:] for f in files])
    return results

lclbench_package_data = gen_data_files('lclbench', 'templates')

setup(
    name='lclbench',
    version=__version__,
    description='LOCAL-model simulator and benchmark toolkit for hierarchical coloring on trees',
    long_description=readme_content,
    long_description_content_type='text/markdown',
    license='MIT',
    keywords="distributed algorithms LOCAL model LCL trees benchmark",
    packages=['lclbench', 'lclbench.algorithms', 'lclbench.commands'],
    scripts=['bin/lcl'],
    package_data={'lclbench': lclbench_package_data},
    install_requires=install_requires,
    extras_require={'test': ['pytest', 'hypothesis']},
    python_requires='>=3.6',
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering",
    ],
)
