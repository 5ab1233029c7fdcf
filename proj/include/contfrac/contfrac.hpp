#pragma once

#include "contfrac/ring.hpp"
#include "contfrac/rational.hpp"
#include "contfrac/modint.hpp"
#include "contfrac/laurent.hpp"
#include "contfrac/laurent_fraction.hpp"
#include "contfrac/io.hpp"
#include "contfrac/chebyshev.hpp"
#include "contfrac/mat2.hpp"
#include "contfrac/continuant.hpp"
#include "contfrac/periodic.hpp"
#include "contfrac/qrational.hpp"
#include "contfrac/quaternion.hpp"
#include "contfrac/bench.hpp"
#include "contfrac/config.hpp"
