"""Module entry point for python -m su11pol."""
from .cli import main

raise SystemExit(main())
