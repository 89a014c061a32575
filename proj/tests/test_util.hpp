#ifndef KSBOUND_TESTS_TEST_UTIL_HPP
#define KSBOUND_TESTS_TEST_UTIL_HPP

#include <doctest.h>

#include "ksbound/error.hpp"

// Asserts that expr throws ksb::Error with the given code.
#define CHECK_ERRC(expr, expected_code)                  \
  do {                                                   \
    bool thrown_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const ksb::Error& e_) {                     \
      thrown_ = true;                                    \
      CHECK(e_.code() == (expected_code));               \
    }                                                    \
    CHECK_MESSAGE(thrown_, #expr " did not throw");      \
  } while (0)

#endif  // KSBOUND_TESTS_TEST_UTIL_HPP
