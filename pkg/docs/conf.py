#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# gcditer documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'gcditer'
copyright = '2026, gcditer developers'
author = 'gcditer developers'

version = '0.1'
release = '0.1.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'gcditerdoc'


# -- Options for LaTeX / manual page output -------------------------------

latex_documents = [
    (master_doc, 'gcditer.tex', 'gcditer Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'gcditer', 'gcditer Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
