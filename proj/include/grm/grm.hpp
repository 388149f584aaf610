#pragma once

#include "grm/algebra.hpp"
#include "grm/codes.hpp"
#include "grm/errors.hpp"
#include "grm/gf.hpp"
#include "grm/interp.hpp"
#include "grm/io.hpp"
#include "grm/linalg.hpp"
#include "grm/multiindex.hpp"
#include "grm/poly.hpp"
#include "grm/verify.hpp"
