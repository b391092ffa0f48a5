# This provides the ability to get the version from the command line.
# Do something like:
#   $ python -m wild_mckay
from wild_mckay import __version__

if __name__ == "__main__":
    print("Wild McKay, version: {}".format(__version__))
