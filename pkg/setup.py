from setuptools import setup, find_packages

with open("README.md", encoding="utf-8") as f:
    README = f.read()

CLASSIFIERS = [
    "Development Status :: 3 - Alpha",
    "Intended Audience :: Science/Research",
    "License :: OSI Approved :: MIT License",
    "Operating System :: OS Independent",
    "Programming Language :: Python",
    "Topic :: Scientific/Engineering :: Physics",
]


REQUIREMENTS = [
    'numpy==2.1.3',
    'pandas==2.2.3',
    'patsy==1.0.1',
    'scipy==1.14.1',
    'statsmodels==0.14.4',
    'matplotlib==3.9.2',
    'plotnine==0.14.1',
    'mpmath==1.3.0',
    'tqdm==4.66.5',
]

PROJECT_URLS = {
    "Source Code": "https://github.com/salvnetto/ncqosc",
}

setup(
    name='ncqosc',
    version='0.1.0',
    description= "Damped charged oscillator in a time-dependent magnetic field on noncommutative phase space.",
    packages= find_packages(exclude=["tests", "tests.*"]),
    package_data= {"ncqosc.dataset": ["datasets/*.json", "datasets/*.txt"]},
    include_package_data= True,
    long_description= README,
    long_description_content_type= "text/markdown",
    url= "https://github.com/salvnetto/ncqosc",
    author= "Fábio N. Demarqui",
    author_email= "fndemarqui@est.ufmg.br",
    maintainer= "Salvador Netto, Tomás Bernardes",
    maintainer_email= "salvv.netto@gmail.com",
    license= "MIT",
    platforms="any",
    classifiers= CLASSIFIERS,
    install_requires= REQUIREMENTS,
    entry_points= {"console_scripts": ["ncqosc=ncqosc.cli.main:main"]},
    zip_safe=False,
    python_requires='>=3.10',
    project_urls=PROJECT_URLS,
)
