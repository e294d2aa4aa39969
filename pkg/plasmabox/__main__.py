# -*- coding: utf-8 -*-
"""
Entry point of ``python -m plasmabox``.
"""

from .cli import main

raise SystemExit(main())
