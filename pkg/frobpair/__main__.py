from __future__ import annotations

import sys

from frobpair._internal.cli.main import main

sys.exit(main())
