#pragma once
// Everything except io.hpp, which needs the vendored JSON header.

#include "fpqs/carleson.hpp"
#include "fpqs/disk.hpp"
#include "fpqs/funcspace.hpp"
#include "fpqs/gauss.hpp"
#include "fpqs/measures.hpp"
#include "fpqs/norms.hpp"
#include "fpqs/operators.hpp"
#include "fpqs/parallel.hpp"
#include "fpqs/quadrature.hpp"
#include "fpqs/search.hpp"
#include "fpqs/verify.hpp"
