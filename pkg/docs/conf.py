# -*- coding: utf-8 -*-
#
# Copyright (C) 2025 Ubiquity Press.
#
# SU21-Endoscopy is free software; you can redistribute it and/or
# modify it under the terms of the MIT License; see LICENSE file for more
# details.

"""Sphinx configuration."""

from su21_endoscopy import __version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]

master_doc = "index"
source_suffix = ".rst"
exclude_patterns = ["_build"]

project = "SU21-Endoscopy"
copyright = "2025, Ubiquity Press"
author = "Ubiquity Press"
release = __version__
language = "en"

# Members are documented with the class docstring and __init__ together.
autoclass_content = "both"
autodoc_member_order = "bysource"

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"
html_theme_options = {
    "description": "Verification workbench for endoscopic transfer on SU(2,1).",
    "show_powered_by": False,
}
html_sidebars = {
    "**": [
        "about.html",
        "navigation.html",
        "relations.html",
        "searchbox.html",
    ]
}

# -- Options for man pages ------------------------------------------------

man_pages = [
    (
        "usage",
        "su21-endoscopy",
        "SU21-Endoscopy verification workbench",
        [author],
        1,
    ),
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}
