# -*- coding: utf-8 -*-
#
# glmn_cb documentation build configuration file.

import sys
import os

# regenerate the API pages on every build
os.system("sphinx-apidoc -f -o ./_modules ../glmn_cb")
sys.path.insert(0, os.path.abspath('../'))


def skip(app, what, name, obj, skip, options):
    if name == "__init__":
        return False
    return skip


def setup(app):
    app.connect("autodoc-skip-member", skip)

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'glmn_cb'
copyright = u'2016, GTRC'
author = u'GTRC'
version = u'0.1'
release = u'0.1'

language = None
exclude_patterns = ['_build', 'setup.py', '*setup.py']
pygments_style = 'sphinx'
todo_include_todos = True

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
html_last_updated_fmt = '%b %d, %Y'
htmlhelp_basename = 'glmn_cbdoc'

latex_documents = [
    (master_doc, 'glmn_cb.tex', u'glmn\\_cb Documentation', author,
     'manual'),
]
man_pages = [
    (master_doc, 'glmn_cb', u'glmn_cb Documentation', [author], 1)
]
