#!/usr/bin/env python3
"""
msym-toolkit - Calcul extérieur exact pour les structures multisymplectiques
Version 1.0.0

Équivalent de la commande `msym` sans installation :
    python main.py stab --catalog g2
"""

import sys
from pathlib import Path

# Ajouter src au PYTHONPATH
sys.path.insert(0, str(Path(__file__).parent / "src"))

from msym_toolkit.cli.main import main  # noqa: E402

if __name__ == "__main__":
    raise SystemExit(main())
