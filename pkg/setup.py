#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

import os

from setuptools import setup, find_packages

_mydir = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(_mydir, 'README.md')) as f:
    _readme = f.read()

_requires = [r for r in open(os.path.join(_mydir, 'requirements.txt'), "r").read().split('\n') if len(r) > 1]
setup(
    name='spinerase',
    version='0.3.0',
    description='Spinerase - exact and sampled statistics of information erasure against a spin reservoir',
    long_description=_readme + '\n\n',
    long_description_content_type='text/markdown',
    python_requires=">=3.8",
    license='Apache2',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    package_dir={'': 'src'},
    packages=find_packages('src'),
    package_data={
        '': ['data/gnuplot/*']
    },
    install_requires=_requires,
    extras_require={
        'test': ['pytest', 'mpmath'],
    },
    entry_points={
        'console_scripts': [
            'spinerase = spinerase.main:run'
        ]
    }
)
