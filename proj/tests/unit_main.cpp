/**
 * @file unit_main.cpp
 * @brief Test-runner entry point for the unit suite.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
