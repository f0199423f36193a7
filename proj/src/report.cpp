#include "tensorforge/report.hpp"

#include <sstream>

namespace tensorforge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::refused: return "refused";
  }
  return "?";
}

Value Value::of(const Vector& v, const Space& space) {
  Value out;
  out.rows = v.dim();
  out.cols = 1;
  out.coords.assign(v.entries().begin(), v.entries().end());
  out.labels = space.basis_labels;
  return out;
}

Value Value::of(const Matrix& m) {
  Value out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.coords.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.coords.push_back(m(r, c));
  return out;
}

std::string Value::render() const {
  std::ostringstream os;
  if (is_matrix()) {
    os << '[';
    for (std::size_t r = 0; r < rows; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < cols; ++c) os << (c ? " " : "") << coords[r * cols + c];
      os << ']';
    }
    os << ']';
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Scalar& c = coords[i];
    if (c.is_zero()) continue;
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    if (mag != Scalar(1)) os << mag << '*';
    os << labels[i];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Verdict Report::verdict() const {
  if (refused_) return Verdict::refused;
  for (const auto& c : checks_)
    if (!c.passed()) return Verdict::fail;
  return Verdict::pass;
}

void Report::refuse(std::string reason) {
  refused_ = true;
  notes_.push_back("refused: " + std::move(reason));
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& n : other.notes_) notes_.push_back(n);
  refused_ = refused_ || other.refused_;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed()) return &c;
  return nullptr;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool CheckRecorder::record_vectors(std::vector<std::string> arguments, const Vector& lhs,
                                   const Vector& rhs, const Space& space) {
  ++result_.tuples;
  if (lhs == rhs) return true;
  ++result_.failure_count;
  if (!opts_.max_witnesses || result_.witnesses.size() < *opts_.max_witnesses)
    result_.witnesses.push_back(Witness{std::move(arguments), Value::of(lhs, space), Value::of(rhs, space)});
  return false;
}

bool CheckRecorder::record_matrices(std::vector<std::string> arguments, const Matrix& lhs,
                                    const Matrix& rhs) {
  ++result_.tuples;
  if (lhs == rhs) return true;
  ++result_.failure_count;
  if (!opts_.max_witnesses || result_.witnesses.size() < *opts_.max_witnesses)
    result_.witnesses.push_back(Witness{std::move(arguments), Value::of(lhs), Value::of(rhs)});
  return false;
}

void require(const Report& r, const std::string& what) {
  if (!r.passed()) throw PreconditionError(what, r);
}

}  // namespace tensorforge
