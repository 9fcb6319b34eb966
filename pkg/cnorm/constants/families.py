CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
SYMMETRIC = "symmetric"
QUATERNION = "quaternion"
PRODUCT = "product"
ELEMENTARY_ABELIAN = "elemabelian"

ALL = (CYCLIC, DIHEDRAL, SYMMETRIC, QUATERNION, PRODUCT, ELEMENTARY_ABELIAN)

# Pseudo-family accepted by `scan` for the standard corpus.
CORPUS = "corpus"
