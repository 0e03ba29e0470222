#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squareice/numeric_types.hpp"

namespace squareice::verification {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct Options {
  int max_n = 0;          // 0 = suite default
  unsigned digits = 50;
  int tuples = 3;
  std::uint64_t seed = 1;
  std::vector<Rational> q_values;  // empty = suite default
  std::vector<Rational> x_values;  // empty = suite default
};

// One suite per acceptance criterion; defaults reproduce the full gate.
Suite total_counts(const Options& opt = {});        // enumeration vs product formula
Suite refined_one(const Options& opt = {});         // refined counts vs closed form
Suite three_routes(const Options& opt = {});        // closed form vs recurrence vs series
Suite refined_three(const Options& opt = {});       // weight-3 closed form vs enumeration
Suite two_enumeration(const Options& opt = {});     // weight-2 power law
Suite two_point_identity(const Options& opt = {});  // two-point from one-point tables
Suite inhomogeneous(const Options& opt = {});       // determinant vs configuration sum
Suite ice_partition_law(const Options& opt = {});   // exact partition function factor
Suite difference_equation(const Options& opt = {}); // symbolic three-term difference
Suite numeric_calibration(const Options& opt = {}); // quadrature pipeline vs exact values
Suite crossing_symmetry(const Options& opt = {});   // lambda reflection of the correlator

std::vector<std::string> suite_names();
Suite run_suite(const std::string& name, const Options& opt = {});

}  // namespace squareice::verification
