#include "strata/local_homology.hpp"

namespace strata {

STRATA_DECLARE_HOMOLOGY(, PrimeField)
STRATA_DECLARE_HOMOLOGY(, RationalField)

}  // namespace strata
