#pragma once

#include "rankvar/error.hpp"
#include "rankvar/qpoly.hpp"
#include "rankvar/field.hpp"
#include "rankvar/permutations.hpp"
#include "rankvar/ranksets.hpp"
#include "rankvar/bridge.hpp"
#include "rankvar/singular.hpp"
#include "rankvar/enumerate.hpp"
#include "rankvar/io.hpp"
#include "rankvar/oracle.hpp"
