# Sphinx configuration of the nolag documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

project = 'nolag'
copyright = '2019, The nolag developers'
author = 'The nolag developers'
release = '0.1'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

exclude_patterns = ['_build']

modindex_common_prefix = ['nolag.']
autodoc_default_options = {
    'members': True,
}
autodoc_preserve_defaults = True

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'navigation_depth': 3,
}
