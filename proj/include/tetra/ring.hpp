#pragma once

#include "tetra/ring/gaussian_rational.hpp"
#include "tetra/ring/half_laurent.hpp"
#include "tetra/ring/poly.hpp"
#include "tetra/ring/qcomb.hpp"
#include "tetra/ring/ratq.hpp"
#include "tetra/ring/ratqz.hpp"
#include "tetra/ring/text.hpp"
#include "tetra/ring/zseries.hpp"
