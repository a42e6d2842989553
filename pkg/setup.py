from setuptools import setup, find_packages

setup(name='gcditer',
      version='0.1.0',
      description='Exact experiments on gcd(a^k-1, b^k-1) and its polynomial '
                  'and matrix analogues',
      license='MIT',
      packages=find_packages(exclude=['tests']),
      python_requires='>=3.9',
      zip_safe=False,
      install_requires=[
          'flask>=2.1',
          'click>=8.0',
          'numpy',
          'sympy>=1.9',
          'uncertainties',
      ],
      extras_require={
          'tests': ['hypothesis'],
      },
      entry_points={
          'console_scripts': ['gcditer=gcditer.cli:main'],
      },
)
