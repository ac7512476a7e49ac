#include "doctest.h"
#include "properties.hpp"

using namespace oadp;
using props::kCases;

TEST_CASE("ring laws") { CHECK(props::ring_laws(kCases) == 0); }

TEST_CASE("gcd and factor reconstruction") { CHECK(props::gcd_factor(kCases) == 0); }

TEST_CASE("standard quadratic transformation is an involution") { CHECK(props::stdquad_involution(kCases) == 0); }

TEST_CASE("Segre symbols are invariant under GL2 and congruence") { CHECK(props::segre_invariance(kCases) == 0); }
