# -*- coding: utf-8 -*-
#
# serialemd documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'numpydoc',
]

# numpydoc builds its own tables of members for autoclass.
numpydoc_show_class_members = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'serialemd'
copyright = u'2026, serialemd contributors'

import serialemd
version = serialemd.__version__
release = serialemd.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

if os.environ.get('READTHEDOCS') != 'True':
    try:
        import sphinx_rtd_theme
    except ImportError:
        pass  # assume we have sphinx >= 1.3
    else:
        html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
    html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'serialemddoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'serialemd.tex', u'serialemd Documentation',
   u'serialemd contributors', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'serialemd', u'serialemd Documentation',
     [u'serialemd contributors'], 1)
]
