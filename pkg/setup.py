from setuptools import setup

# Read the version without importing the package (sympy may not be installed yet).
with open('wild_mckay/__init__.py') as f:
    version = [line.split("'")[1] for line in f if line.startswith('__version__')][0]

setup(
    name='wild-mckay',
    version=version,
    description=('Exact invariants, v-functions, truncated stringy motives and '
                 'singularity verdicts for linear quotients by Z/p^nZ in characteristic p.'),
    license='MIT',
    packages=['wild_mckay'],
    package_dir={'wild_mckay': 'wild_mckay'},
    install_requires=['sympy>=1.5'],
    extras_require={'test': ['pytest']},
    python_requires='>=3.8',
    scripts=['scripts/mckay_calculator.py'],
    entry_points={'console_scripts': ['wild-mckay = wild_mckay.cli:main']},
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
