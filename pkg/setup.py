from setuptools import setup


def readme():
    with open('README.rst') as f:
        return f.read()


def load_license():
    with open('LICENSE.rst') as f:
        return f.read()

setup(name='glmn_cb',
      version='0.1',
      description='Canonical bases of the quantum supergroup U(gl_{m|n}) '
                  'computed through quantum Schur superalgebras',
      long_description=readme(),
      classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
      keywords='quantum supergroup canonical basis schur superalgebra',
      author='GTRC',
      license=load_license(),
      packages=['glmn_cb', 'glmn_cb.uplus', 'glmn_cb.schur'],
      install_requires=[
      ],
      extras_require={
        'test': ['pytest', 'hypothesis'],
        'docs': ['sphinx', 'sphinx_rtd_theme'],
      },
      include_package_data=True,
      entry_points={
        'console_scripts': ['glmn-cb=glmn_cb.cb_cli:main']
      },
      zip_safe=False)
