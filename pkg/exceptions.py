# base class for every error raised on purpose by this package
class WroError( Exception ):

    pass

# the job document, report or grid file does not match its schema
class MalformedInput( WroError ):

    pass

# an operation was called outside the inputs it is defined for,
# the reason is given as the exception message
class PreconditionError( WroError ):

    pass

# zeros could only be counted, not located
class CountOnly( PreconditionError ):

    def __init__( self, message: str, count: int ) -> None:

        super().__init__( message )
        self.count = count

# a numerical routine could not reach a trustworthy answer
class NumericalFailure( WroError ):

    pass
