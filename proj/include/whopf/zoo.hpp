#pragma once

// The bundled example algebras and the acceptance suite run over them.

#include <optional>
#include <string>
#include <vector>

#include "whopf/io.hpp"

namespace whopf {

struct ZooMember {
  std::string name;
  AnyWha algebra;
  bool minimal = false;  // generated by its unit: H = H_min
};

/// Q[Z/2], Q(zeta_3)[Z/3], Q[S_3], pair groupoids on 2 and 3 objects and their duals,
/// Z/2 + Z/2, H_min(Q+Q, Q1, 1), H_min(M_2, Q1, 1), H_min(M_2, Q1, diag(3,-1)), the
/// dynamical twist host M_2 (x) Q[Z/2] and its twist by J = 1.
std::vector<ZooMember> zoo_members();

/// Looks a member up by name; throws InvalidArgument listing the known names.
ZooMember zoo_member(const std::string& name);

/// Trivial dynamical twist data for Q[Z/2] with A = Z/2.
DynamicalTwistData<Rational> z2_dynamical_data();

/// A second J for the same data: a gauge transform of J = 1.
DynamicalTwistData<Rational> z2_gauge_dynamical_data();

struct SuiteOptions {
  std::optional<std::string> mutate;  // corrupt this member's counit before checking
};

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CaseResult> cases;
  bool passed() const;
};

/// The ten acceptance criteria, in order. Criterion 10 runs the first nine twice and
/// compares the serialized reports byte for byte.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

json suite_to_json(const std::vector<CriterionResult>& results);

/// One line per criterion plus an indented line per failing case.
std::string suite_summary(const std::vector<CriterionResult>& results);

}  // namespace whopf
