import sys

from demazure.cli.parser import main


sys.exit(main())
