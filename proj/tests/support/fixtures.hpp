#pragma once

#include "tensorforge/problem_file.hpp"

#include <string>

namespace tf_test {

inline std::string fixture_path(const std::string& name) { return std::string(TF_FIXTURE_DIR) + "/" + name; }

inline tensorforge::ProblemFile load_fixture(const std::string& name,
                                             const std::map<std::string, tensorforge::Scalar>& params = {}) {
  return tensorforge::load_problem(fixture_path(name), params);
}

/// The parameterized 4-dimensional example with adjoint action and
/// Lambda = diag(1, 1, 2k, k).
inline tensorforge::EmbeddingTensorProblem example_net(const tensorforge::Scalar& k) {
  return load_fixture("parametric_a4.json", {{"k", k}}).net("rho", "H", "Lambda");
}

}  // namespace tf_test
