IDENTITY_DEGREES = range(-2, 4)
LATTICE_GENERATOR_COUNT = 2
ORDINARY_DEGREE_LIMIT = 4
