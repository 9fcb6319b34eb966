from .dihedral import dihedral_degree, make_dihedral
from .products import direct_product, make_cyclic, make_elementary_abelian
from .quaternion import make_generalized_quaternion
from .symmetric import make_symmetric
from .family_spec import FamilySpec
from .corpus import FIXED_PRODUCTS, corpus_specs, family_members, standard_corpus
