#pragma once

#include "nsg/classification.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/errors.hpp"
#include "nsg/integer.hpp"
#include "nsg/master_equation.hpp"
#include "nsg/med.hpp"
#include "nsg/multiset.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/report.hpp"
#include "nsg/resolution.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/simplicial.hpp"
