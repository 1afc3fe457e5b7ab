#ifndef SRPOLY_SRPOLY_HPP
#define SRPOLY_SRPOLY_HPP

#include "srpoly/census.hpp"
#include "srpoly/error.hpp"
#include "srpoly/factor.hpp"
#include "srpoly/field.hpp"
#include "srpoly/poly.hpp"
#include "srpoly/recip.hpp"
#include "srpoly/theorems.hpp"

#endif  // SRPOLY_SRPOLY_HPP
