#pragma once

#include "liesplit/bits.hpp"
#include "liesplit/catalog.hpp"
#include "liesplit/document.hpp"
#include "liesplit/exterior.hpp"
#include "liesplit/grading.hpp"
#include "liesplit/linalg.hpp"
#include "liesplit/pbw.hpp"
#include "liesplit/scalar.hpp"
#include "liesplit/subalgebra.hpp"
#include "liesplit/superalgebra.hpp"
