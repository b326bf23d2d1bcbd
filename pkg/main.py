# -*- coding:utf-8 -*-
'''Command line entry point, e.g.

    python main.py keypoly --shape "[1,1,0]" --chain "[[2],[2,3]]"
'''

import sys

from demazure.cli.parser import main


if __name__ == "__main__":
    sys.exit(main())
