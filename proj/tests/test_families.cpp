#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"
TEST_CASE("placeholder") { CHECK(true); }
