#ifndef GVTORIC_GVTORIC_HPP
#define GVTORIC_GVTORIC_HPP

#include "arith.hpp"
#include "congruence.hpp"
#include "errors.hpp"
#include "gv.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "qscalar.hpp"
#include "schur.hpp"
#include "vertex.hpp"
#include "xpoly.hpp"

#endif
