#pragma once

// Umbrella header.

#include "hyperfuse/catalog.hpp"
#include "hyperfuse/error.hpp"
#include "hyperfuse/fusion.hpp"
#include "hyperfuse/grading.hpp"
#include "hyperfuse/harmonic.hpp"
#include "hyperfuse/hypergroup.hpp"
#include "hyperfuse/interval.hpp"
#include "hyperfuse/io.hpp"
#include "hyperfuse/linalg.hpp"
#include "hyperfuse/polynomial.hpp"
#include "hyperfuse/quad.hpp"
#include "hyperfuse/quotient.hpp"
#include "hyperfuse/rational.hpp"
#include "hyperfuse/report.hpp"
#include "hyperfuse/scalar.hpp"
