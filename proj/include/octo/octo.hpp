#pragma once

#include "octo/associator.hpp"
#include "octo/error.hpp"
#include "octo/expr.hpp"
#include "octo/identities.hpp"
#include "octo/octonion.hpp"
#include "octo/octonion_io.hpp"
#include "octo/product_tree.hpp"
#include "octo/random.hpp"
#include "octo/rational.hpp"
#include "octo/scalar.hpp"
