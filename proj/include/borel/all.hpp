#ifndef BOREL_ALL_HPP
#define BOREL_ALL_HPP

#include "borel.hpp"
#include "borel_sort.hpp"
#include "error.hpp"
#include "family.hpp"
#include "fibers.hpp"
#include "incidence.hpp"
#include "monomial.hpp"
#include "multisink.hpp"
#include "quadrics.hpp"
#include "spairs.hpp"
#include "tproduct.hpp"

#endif
