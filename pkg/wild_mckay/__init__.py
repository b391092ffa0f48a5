from wild_mckay import (convergence, digits, grothendieck, loggers, ramification,
                        representation, series, vfunction)

__version__ = '0.3.0'
__all__     = ['cli', 'convergence', 'digits', 'errors', 'grothendieck', 'loggers',
               'ramification', 'representation', 'series', 'vfunction']
