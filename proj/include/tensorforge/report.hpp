#pragma once

#include "tensorforge/multilinear.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tensorforge {

enum class Verdict { pass, fail, refused };

std::string to_string(Verdict v);

/// One evaluated side of an identity: a vector (cols == 1) or a matrix.
struct Value {
  std::size_t rows = 0;
  std::size_t cols = 1;
  std::vector<Scalar> coords;
  /// Basis labels used when rendering a vector value.
  std::vector<std::string> labels;

  static Value of(const Vector& v, const Space& space);
  static Value of(const Matrix& m);
  bool is_matrix() const { return cols != 1 || labels.empty(); }
  std::string render() const;
  friend bool operator==(const Value&, const Value&) = default;
};

struct Witness {
  std::vector<std::string> arguments;
  Value lhs;
  Value rhs;
};

/// Outcome of one identity over its tuple range.
struct CheckResult {
  std::string name;
  std::string identity;
  std::size_t tuples = 0;
  std::size_t failure_count = 0;
  std::vector<Witness> witnesses;
  bool passed() const { return failure_count == 0; }
};

struct CheckOptions {
  /// Witnesses kept per check; nullopt keeps all of them.
  std::optional<std::size_t> max_witnesses = 20;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::pass; }

  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(CheckResult c) { checks_.push_back(std::move(c)); }
  void note(std::string n) { notes_.push_back(std::move(n)); }
  void refuse(std::string reason);
  bool refused() const { return refused_; }
  void append(const Report& other);

  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
  bool refused_ = false;
};

/// Builds a CheckResult one tuple at a time.
class CheckRecorder {
 public:
  CheckRecorder(std::string name, std::string identity, const CheckOptions& opts)
      : opts_(opts) {
    result_.name = std::move(name);
    result_.identity = std::move(identity);
  }

  /// Compares both sides; on mismatch stores a witness (up to the limit).
  bool record_vectors(std::vector<std::string> arguments, const Vector& lhs, const Vector& rhs,
                      const Space& space);
  bool record_matrices(std::vector<std::string> arguments, const Matrix& lhs, const Matrix& rhs);

  CheckResult finish() && { return std::move(result_); }

 private:
  CheckOptions opts_;
  CheckResult result_;
};

/// Thrown when an operation's precondition check fails; carries the report
/// that explains why.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Throws PreconditionError(what, r) unless r passed.
void require(const Report& r, const std::string& what);

}  // namespace tensorforge
