from setuptools import setup, find_packages

name = 'l2switch'
version = '0.1.0'

DESCRIPTION = '''\
Level-2 switching methods for constructing R-cospectral graphs\
'''

with open('README.md', 'r') as fh:
    LONG_DESCRIPTION = fh.read()

install_requires = [
    'numpy',
    'scipy',
    'networkx',
    'tqdm'
]

setup(
    name=name,
    version=version,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords = ['graph', 'graphs', 'spectrum', 'cospectral', 'switching',
                'godsil-mckay', 'regular orthogonal matrix', 'spectral graph theory',
                'fano plane', 'kneser graph'],
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=install_requires,
    license='MIT',
    python_requires='>=3.9',
    entry_points={
        'console_scripts': [
            'l2switch=l2switch.cli.main:main'
        ]
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        f'Programming Language :: Python :: 3.9'
    ],
    package_data={'l2switch': ['data/*.txt']},
    include_package_data=True,
    zip_safe=False
)
