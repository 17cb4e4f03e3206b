#pragma once

#include "symdec/admissible.hpp"
#include "symdec/algebra.hpp"
#include "symdec/apolar.hpp"
#include "symdec/candidates.hpp"
#include "symdec/decomposition.hpp"
#include "symdec/format.hpp"
#include "symdec/ideal.hpp"
#include "symdec/realize.hpp"
