#ifndef SETPAT_SETPAT_HPP
#define SETPAT_SETPAT_HPP

#include "setpat/errors.hpp"
#include "setpat/fastpaths.hpp"
#include "setpat/matchers.hpp"
#include "setpat/oracle.hpp"
#include "setpat/permutation.hpp"
#include "setpat/reduction.hpp"
#include "setpat/rgf.hpp"
#include "setpat/set_partition.hpp"
#include "setpat/standardize.hpp"
#include "setpat/text_format.hpp"
#include "setpat/witness.hpp"

#endif
