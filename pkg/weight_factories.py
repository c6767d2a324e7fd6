# import dependencies
from angles import NamedIrrational, RootOfUnity, RotationVector # type: ignore
from weights import MultiPolynomial, Polynomial, Rational # type: ignore

# rotations
golden = NamedIrrational( "golden" )
silver = NamedIrrational( "sqrt2" )
cube_root = RootOfUnity( 1, 3 )
golden_torus = RotationVector( ( golden, silver ) )

# invertible in the disc algebra, spectrum the circle of radius |w(0)| = 2
z_minus_two = Polynomial( [ -2.0, 1.0 ] )

# zero on the unit circle, spectrum the closed unit disc
z_minus_one = Polynomial( [ -1.0, 1.0 ] )

# invertible on the circle with one zero inside: residual disc of radius 2, index -1
residual_pair = Polynomial( [ 1.0, -2.5, 1.0 ] ) # ( z - 2 )( z - 1/2 )

# double zero at the origin: index -2
origin_double = Polynomial( [ 0.0, 0.0, -2.0, 1.0 ] ) # z^2 ( z - 2 )

one = Polynomial( [ 1.0 ] )
z = Polynomial( [ 0.0, 1.0 ] )
z_minus_half = Polynomial( [ -0.5, 1.0 ] )

# ( z - 2 ) / ( 1 - z / 3 ), a closed form weight that is not a polynomial
shifted_ratio = Rational( [ -2.0, 1.0 ], [ 1.0, -1.0 / 3.0 ] )

# z_1 - 1/2 on the bidisc: invertible on the torus, not on the polydisc
bidisc_residual = MultiPolynomial.lift( z_minus_half, 2 )
