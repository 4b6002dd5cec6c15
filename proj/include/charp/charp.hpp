#pragma once

// Exact test-ideal computations over prime-field polynomial rings:
// Groebner kernel, Frobenius bracket powers and roots, tau fixed points,
// linkage identities and the restriction containment check.

#include "charp/errors.hpp"
#include "charp/rational.hpp"
#include "charp/ring.hpp"
#include "charp/polynomial.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/ideal_ops.hpp"
#include "charp/frobenius.hpp"
#include "charp/product_root.hpp"
#include "charp/test_ideal.hpp"
#include "charp/monomial_oracle.hpp"
#include "charp/linkage.hpp"
#include "charp/restriction.hpp"
#include "charp/io.hpp"
