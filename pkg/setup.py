from setuptools import setup, find_packages

import serialemd

NAME = 'serialemd'
VERSION = serialemd.__version__
DESCRIPTION = 'Serial empirical mode decomposition (EMD, EEMD, CEEMDAN) of multi-signals and images'
with open('README.rst') as f:
    LONG_DESCRIPTION = f.read()
with open('requirements.txt') as f:
    INSTALL_REQUIRES = [line.strip() for line in f if line.strip()]
CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Environment :: Console',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Operating System :: OS Independent',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Topic :: Scientific/Engineering',
    'Topic :: Scientific/Engineering :: Image Processing',
    'Topic :: Software Development :: Libraries',
]

if __name__ == '__main__':
    setup(name=NAME,
          version=VERSION,
          description=DESCRIPTION,
          long_description=LONG_DESCRIPTION,
          license='BSD',
          classifiers=CLASSIFIERS,
          platforms='any',
          python_requires='>=3.8',
          install_requires=INSTALL_REQUIRES,
          extras_require={'test': ['pytest', 'hypothesis']},
          entry_points={'console_scripts': ['serialemd = serialemd.cli:main']},
          packages=find_packages())
