#ifndef LATBIJ_KIMBERLING_HPP
#define LATBIJ_KIMBERLING_HPP

#include "latbij/paths.hpp"

namespace latbij {

// The recursive map from bounded sequences in L(i,j) to Kimberling paths
// terminating at (i+1, j), and its inverse. The inverse needs no ambient j:
// it reads j off the terminal vertex.
KimberlingPath phi(const BoundedSeq& u);
BoundedSeq phi_inv(const KimberlingPath& q);

}  // namespace latbij

#endif
