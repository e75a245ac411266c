# -*- coding: utf-8 -*-
#
# hereditary-lab documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath(".."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = u"hereditary-lab"
copyright = u"2026, hereditary-lab contributors"
author = u"hereditary-lab contributors"

version = "0.1"
release = "0.1.0"

language = None
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = True

html_theme = "alabaster"
htmlhelp_basename = "hlabdoc"

latex_documents = [
    (master_doc, "hlab.tex", u"hereditary-lab Documentation", author, "manual")
]

man_pages = [(master_doc, "hlab", u"hereditary-lab Documentation", [author], 1)]

texinfo_documents = [
    (
        master_doc,
        "hlab",
        u"hereditary-lab Documentation",
        author,
        "hlab",
        "Desk-scale experiments on hereditary set systems.",
        "Miscellaneous",
    )
]

intersphinx_mapping = {"https://docs.python.org/": None}
