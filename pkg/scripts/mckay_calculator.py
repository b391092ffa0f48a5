#!/usr/bin/env python

import sys

from wild_mckay import cli

def main ():
    '''Runs one wild_mckay command from the arguments given on the command line.

    See 'mckay_calculator.py --help' for the subcommands and their options.
    '''
    sys.exit(cli.run(sys.argv[1:]))

if __name__ == "__main__":
    main()
