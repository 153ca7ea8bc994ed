import ncqosc

project = 'ncqosc'
copyright = '2024, Fábio N. Demarqui, Salvador Netto, Tomás Bernardes'
author = 'Fábio N. Demarqui, Salvador Netto, Tomás Bernardes'
version = ncqosc.__version__
release = version


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
exclude_patterns = []


html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
