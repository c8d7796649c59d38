#pragma once

#include "hallpaige/analysis.hpp"
#include "hallpaige/builtin.hpp"
#include "hallpaige/coxeter.hpp"
#include "hallpaige/error.hpp"
#include "hallpaige/exact_cover.hpp"
#include "hallpaige/finite_field.hpp"
#include "hallpaige/group.hpp"
#include "hallpaige/group_spec.hpp"
#include "hallpaige/io.hpp"
#include "hallpaige/lifting.hpp"
#include "hallpaige/mapping.hpp"
#include "hallpaige/matching.hpp"
#include "hallpaige/permutation.hpp"
#include "hallpaige/psl2.hpp"
