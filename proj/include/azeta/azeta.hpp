#pragma once

#include "azeta/types.hpp"
#include "azeta/rational.hpp"
#include "azeta/specfun.hpp"
#include "azeta/additive.hpp"
#include "azeta/multiplicative.hpp"
#include "azeta/hadamard.hpp"
