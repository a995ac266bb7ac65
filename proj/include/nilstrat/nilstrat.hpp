#ifndef NILSTRAT_NILSTRAT_HPP
#define NILSTRAT_NILSTRAT_HPP

#include "error.hpp"
#include "field.hpp"
#include "jordan.hpp"
#include "matrix.hpp"
#include "moduli.hpp"
#include "monodromy.hpp"
#include "partition.hpp"
#include "reduced.hpp"
#include "stratification.hpp"

#endif
