import sys

from exactsample.cli import main

sys.exit(main())
