#ifndef WALKMAT_HPP
#define WALKMAT_HPP

#include "walkmat/error.hpp"
#include "walkmat/rational.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/graph_io.hpp"
#include "walkmat/walk.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/reconstruct.hpp"
#include "walkmat/canonical.hpp"
#include "walkmat/oracle.hpp"
#include "walkmat/serialize.hpp"

#endif  // WALKMAT_HPP
