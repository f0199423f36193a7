#include "tensorforge/problem_file.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace tensorforge {

using nlohmann::json;

std::string to_string(BracketKind k) {
  switch (k) {
    case BracketKind::ternary_alternating: return "ternary-alternating";
    case BracketKind::ternary: return "ternary";
    case BracketKind::binary_alternating: return "binary-alternating";
    case BracketKind::binary: return "binary";
  }
  return "?";
}

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::pair: return "pair";
    case ActionKind::adjoint: return "adjoint";
    case ActionKind::lie: return "lie";
    case ActionKind::leibniz_rep: return "leibniz-rep";
  }
  return "?";
}

// ---------------------------------------------------------------- expressions

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::map<std::string, Scalar>& params)
      : text_(text), params_(params) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw InputError("malformed rational '" + std::string(text_) + "': " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) error("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar::parse(text_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = params_.find(name);
      if (it == params_.end()) error("unknown parameter '" + name + "'");
      return it->second;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<std::string, Scalar>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar evaluate_expression(std::string_view text, const std::map<std::string, Scalar>& params) {
  return ExpressionParser(text, params).parse();
}

// ---------------------------------------------------------------- positions

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Maps JSON pointers to the offset where their value starts. Runs only on
// text nlohmann has already accepted.
class PositionIndex {
 public:
  explicit PositionIndex(std::string_view text) : text_(text) { value(""); }

  std::optional<std::size_t> offset(const std::string& pointer) const {
    auto it = at_.find(pointer);
    if (it == at_.end()) return std::nullopt;
    return it->second;
  }
  const std::optional<std::pair<std::string, std::size_t>>& duplicate() const { return duplicate_; }

 private:
  void ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string string() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
        const char e = text_[pos_];
        if (e == 'u') {
          out += "\\u" + std::string(text_.substr(pos_ + 1, 4));
          pos_ += 4;
        } else {
          out += e == 'n' ? '\n' : e == 't' ? '\t' : e == 'r' ? '\r' : e == 'b' ? '\b' : e == 'f' ? '\f' : e;
        }
      } else {
        out += text_[pos_];
      }
      ++pos_;
    }
    ++pos_;  // closing quote
    return out;
  }
  void value(const std::string& path) {
    ws();
    at_.emplace(path, pos_);
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      std::set<std::string> seen;
      for (;;) {
        ws();
        if (text_[pos_] == '}') {
          ++pos_;
          return;
        }
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        const std::size_t key_pos = pos_;
        std::string key = string();
        if (!seen.insert(key).second && !duplicate_) duplicate_ = std::make_pair(path + "/" + escape_pointer(key), key_pos);
        ws();
        ++pos_;  // colon
        value(path + "/" + escape_pointer(key));
      }
    }
    if (c == '[') {
      ++pos_;
      std::size_t idx = 0;
      for (;;) {
        ws();
        if (text_[pos_] == ']') {
          ++pos_;
          return;
        }
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        value(path + "/" + std::to_string(idx++));
      }
    }
    if (c == '"') {
      string();
      return;
    }
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
           text_[pos_] != '}' && text_[pos_] != ']')
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> at_;
  std::optional<std::pair<std::string, std::size_t>> duplicate_;
};

// ---------------------------------------------------------------- reader

class Reader {
 public:
  Reader(std::string_view text, const std::string& source, const std::map<std::string, Scalar>& overrides)
      : text_(text), source_(source), overrides_(overrides), index_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    std::string p = path;
    std::optional<std::size_t> off = index_.offset(p);
    while (!off && !p.empty()) {
      p = p.substr(0, p.rfind('/'));
      off = index_.offset(p);
    }
    Position pos = position_at(text_, off.value_or(0));
    throw InputError(source_ + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + what +
                     " (at " + (path.empty() ? "/" : path) + ")");
  }

  ProblemFile read(const json& root) {
    if (auto d = index_.duplicate()) fail(d->first, "duplicate key");
    if (!root.is_object()) fail("", "top level must be an object");
    allow(root, "", {"name", "parameters", "spaces", "brackets", "actions", "tensors", "traces"});
    ProblemFile p;
    if (root.contains("name")) p.name = string_at(root["name"], "/name");
    read_parameters(root);
    if (!root.contains("spaces")) fail("", "missing field 'spaces'");
    const json& spaces = object_at(root["spaces"], "/spaces");
    if (spaces.empty()) fail("/spaces", "at least one space is required");
    for (auto& [name, s] : spaces.items()) p.spaces.emplace(name, read_space(name, s, "/spaces/" + escape_pointer(name)));
    p_ = &p;
    if (root.contains("brackets"))
      for (auto& [name, b] : object_at(root["brackets"], "/brackets").items())
        p.brackets.emplace(name, read_bracket(b, "/brackets/" + escape_pointer(name)));
    for (auto& [name, b] : p.brackets) check_alias(name);
    if (root.contains("actions"))
      for (auto& [name, a] : object_at(root["actions"], "/actions").items())
        p.actions.emplace(name, read_action(a, "/actions/" + escape_pointer(name)));
    if (root.contains("tensors"))
      for (auto& [name, t] : object_at(root["tensors"], "/tensors").items())
        p.tensors.emplace(name, read_tensor(t, "/tensors/" + escape_pointer(name)));
    if (root.contains("traces"))
      for (auto& [name, t] : object_at(root["traces"], "/traces").items())
        p.traces.emplace(name, read_trace(t, "/traces/" + escape_pointer(name)));
    return p;
  }

 private:
  void allow(const json& obj, const std::string& path, std::initializer_list<const char*> fields) const {
    for (auto& [key, v] : obj.items()) {
      bool ok = false;
      for (const char* f : fields) ok = ok || key == f;
      if (!ok) fail(path + "/" + escape_pointer(key), "unknown field '" + key + "'");
    }
  }
  void need(const json& obj, const std::string& path, const char* field) const {
    if (!obj.contains(field)) fail(path, std::string("missing field '") + field + "'");
  }
  const json& object_at(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
  }
  const json& array_at(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }
  std::string string_at(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  Scalar scalar_at(const json& j, const std::string& path) const {
    try {
      if (j.is_number_integer()) return Scalar::parse(j.dump());
      if (j.is_string()) return evaluate_expression(j.get<std::string>(), params_);
    } catch (const InputError& e) {
      fail(path, e.what());
    }
    fail(path, "expected an integer or a rational string");
  }
  std::size_t index_in(const std::string& text, std::size_t dim, const std::string& path) const {
    if (text.empty() || text.size() > 9 || text[0] == '0')
      fail(path, "malformed index '" + text + "'");
    for (char c : text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(path, "malformed index '" + text + "'");
    const std::size_t i = std::stoul(text);
    if (i > dim) fail(path, "index " + text + " out of range 1.." + std::to_string(dim));
    return i - 1;
  }
  std::vector<std::size_t> key_indices(const std::string& key, std::size_t arity, std::size_t dim,
                                       const std::string& path) const {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = key.find(',', start);
      out.push_back(index_in(key.substr(start, comma == std::string::npos ? std::string::npos : comma - start), dim,
                             path));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (out.size() != arity)
      fail(path, "key '" + key + "' needs " + std::to_string(arity) + " comma-separated indices");
    return out;
  }

  void read_parameters(const json& root) {
    std::map<std::string, Scalar> declared;
    if (root.contains("parameters")) {
      for (auto& [name, v] : object_at(root["parameters"], "/parameters").items()) {
        const std::string path = "/parameters/" + escape_pointer(name);
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
          fail(path, "parameter names must be identifiers");
        declared.emplace(name, scalar_at(v, path));
      }
    }
    for (auto& [name, v] : overrides_) {
      auto it = declared.find(name);
      if (it == declared.end()) throw InputError(source_ + ": --param " + name + " is not a declared parameter");
      it->second = v;
    }
    params_ = std::move(declared);
  }

  Space read_space(const std::string& name, const json& j, const std::string& path) const {
    object_at(j, path);
    allow(j, path, {"dim", "labels"});
    if (!j.contains("dim") && !j.contains("labels")) fail(path, "a space needs 'dim' or 'labels'");
    std::optional<std::size_t> dim;
    if (j.contains("dim")) {
      if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        fail(path + "/dim", "dimension must be a positive integer");
      dim = j["dim"].get<std::size_t>();
    }
    if (!j.contains("labels")) return Space::numbered(name, *dim);
    std::vector<std::string> labels;
    std::set<std::string> seen;
    const json& arr = array_at(j["labels"], path + "/labels");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string l = string_at(arr[i], path + "/labels/" + std::to_string(i));
      if (l.empty() || !seen.insert(l).second)
        fail(path + "/labels/" + std::to_string(i), "labels must be nonempty and distinct");
      labels.push_back(l);
    }
    if (labels.empty()) fail(path + "/labels", "a space needs at least one basis vector");
    if (dim && *dim != labels.size()) fail(path + "/dim", "dim does not match the number of labels");
    return Space(name, std::move(labels));
  }

  const Space& space_ref(const json& j, const std::string& path) const {
    std::string n = string_at(j, path);
    auto it = p_->spaces.find(n);
    if (it == p_->spaces.end()) fail(path, "unknown space '" + n + "'");
    return it->second;
  }

  Vector read_vector(const json& j, std::size_t dim, const std::string& path) const {
    object_at(j, path);
    Vector v(dim);
    for (auto& [key, val] : j.items()) {
      const std::string p = path + "/" + escape_pointer(key);
      v[index_in(key, dim, p)] = scalar_at(val, p);
    }
    return v;
  }

  Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path,
                     std::initializer_list<const char*> extra = {}) const {
    object_at(j, path);
    for (auto& [key, v] : j.items()) {
      bool ok = key == "rows" || key == "entries";
      for (const char* f : extra) ok = ok || key == f;
      if (!ok) fail(path + "/" + escape_pointer(key), "unknown field '" + key + "'");
    }
    const bool has_rows = j.contains("rows"), has_entries = j.contains("entries");
    if (has_rows == has_entries) fail(path, "a matrix needs exactly one of 'rows' and 'entries'");
    Matrix m(rows, cols);
    if (has_rows) {
      const json& rs = array_at(j["rows"], path + "/rows");
      if (rs.size() != rows) fail(path + "/rows", "expected " + std::to_string(rows) + " rows");
      for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "/rows/" + std::to_string(r);
        const json& row = array_at(rs[r], rp);
        if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_at(row[c], rp + "/" + std::to_string(c));
      }
      return m;
    }
    for (auto& [key, val] : object_at(j["entries"], path + "/entries").items()) {
      const std::string p = path + "/entries/" + escape_pointer(key);
      auto rc = key_indices(key, 2, std::max(rows, cols), p);
      if (rc[0] >= rows || rc[1] >= cols) fail(p, "entry outside the " + std::to_string(rows) + "x" +
                                                      std::to_string(cols) + " matrix");
      m(rc[0], rc[1]) = scalar_at(val, p);
    }
    return m;
  }

  BracketDecl read_bracket(const json& j, const std::string& path) const {
    object_at(j, path);
    BracketDecl b;
    if (j.contains("alias")) {
      allow(j, path, {"alias"});
      b.alias = string_at(j["alias"], path + "/alias");
      return b;
    }
    allow(j, path, {"kind", "space", "entries"});
    need(j, path, "kind");
    need(j, path, "space");
    const std::string kind = string_at(j["kind"], path + "/kind");
    if (kind == "ternary-alternating")
      b.kind = BracketKind::ternary_alternating;
    else if (kind == "ternary")
      b.kind = BracketKind::ternary;
    else if (kind == "binary-alternating")
      b.kind = BracketKind::binary_alternating;
    else if (kind == "binary")
      b.kind = BracketKind::binary;
    else
      fail(path + "/kind", "unknown bracket kind '" + kind + "'");
    const Space& s = space_ref(j["space"], path + "/space");
    b.space = s.name;
    const std::size_t n = s.dim();
    const bool alt = b.kind == BracketKind::ternary_alternating || b.kind == BracketKind::binary_alternating;
    if (b.is_ternary())
      b.ternary = TrilinearTable(n, n);
    else
      b.binary = BilinearTable(n, n);
    if (!j.contains("entries")) return b;
    AlternatingTrilinearTable at(n, n);
    AlternatingBilinearTable ab(n, n);
    for (auto& [key, val] : object_at(j["entries"], path + "/entries").items()) {
      const std::string p = path + "/entries/" + escape_pointer(key);
      auto idx = key_indices(key, b.is_ternary() ? 3 : 2, n, p);
      bool increasing = true;
      for (std::size_t i = 1; i < idx.size(); ++i) increasing = increasing && idx[i - 1] < idx[i];
      if (alt && !increasing) fail(p, "alternating brackets list strictly increasing index tuples only");
      Vector v = read_vector(val, n, p);
      if (b.kind == BracketKind::ternary_alternating)
        at.set(idx[0], idx[1], idx[2], v);
      else if (b.kind == BracketKind::ternary)
        b.ternary.set(idx[0], idx[1], idx[2], std::move(v));
      else if (b.kind == BracketKind::binary_alternating)
        ab.set(idx[0], idx[1], v);
      else
        b.binary.set(idx[0], idx[1], std::move(v));
    }
    if (b.kind == BracketKind::ternary_alternating) b.ternary = at.as_general();
    if (b.kind == BracketKind::binary_alternating) b.binary = ab.as_general();
    return b;
  }

  void check_alias(const std::string& name) const {
    std::set<std::string> seen{name};
    std::string cur = name;
    while (p_->brackets.at(cur).alias) {
      const std::string next = *p_->brackets.at(cur).alias;
      if (!p_->brackets.count(next)) fail("/brackets/" + escape_pointer(cur) + "/alias", "unknown bracket '" + next + "'");
      if (!seen.insert(next).second) fail("/brackets/" + escape_pointer(name) + "/alias", "alias cycle");
      cur = next;
    }
  }

  const BracketDecl& bracket_ref(const json& j, const std::string& path, bool ternary, bool alternating) const {
    std::string n = string_at(j, path);
    if (!p_->brackets.count(n)) fail(path, "unknown bracket '" + n + "'");
    const BracketDecl& b = p_->bracket(n);
    if (b.is_ternary() != ternary) fail(path, "bracket '" + n + "' must be " + (ternary ? "ternary" : "binary"));
    if (alternating && b.kind != BracketKind::ternary_alternating && b.kind != BracketKind::binary_alternating)
      fail(path, "bracket '" + n + "' must be alternating");
    return b;
  }

  std::vector<Matrix> read_pair_table(const json& j, std::size_t n, std::size_t v, const std::string& path) const {
    std::vector<Matrix> out(n * n, Matrix(v, v));
    for (auto& [key, val] : object_at(j, path).items()) {
      const std::string p = path + "/" + escape_pointer(key);
      auto ab = key_indices(key, 2, n, p);
      out[ab[0] * n + ab[1]] = read_matrix(val, v, v, p);
    }
    return out;
  }

  ActionDecl read_action(const json& j, const std::string& path) const {
    object_at(j, path);
    need(j, path, "kind");
    ActionDecl a;
    const std::string kind = string_at(j["kind"], path + "/kind");
    need(j, path, "algebra");
    a.algebra = string_at(j["algebra"], path + "/algebra");
    if (kind == "adjoint") {
      allow(j, path, {"kind", "algebra"});
      a.kind = ActionKind::adjoint;
      a.carrier = bracket_ref(j["algebra"], path + "/algebra", true, true).space;
      return a;
    }
    if (kind == "pair") {
      allow(j, path, {"kind", "algebra", "carrier", "entries"});
      a.kind = ActionKind::pair;
      const std::size_t n = p_->spaces.at(bracket_ref(j["algebra"], path + "/algebra", true, true).space).dim();
      need(j, path, "carrier");
      const Space& c = space_ref(j["carrier"], path + "/carrier");
      a.carrier = c.name;
      a.pair = PairAction(n, c.dim());
      if (j.contains("entries"))
        for (auto& [key, val] : object_at(j["entries"], path + "/entries").items()) {
          const std::string p = path + "/entries/" + escape_pointer(key);
          auto ij = key_indices(key, 2, n, p);
          if (ij[0] >= ij[1]) fail(p, "pair actions list increasing pairs i<j only");
          a.pair.set(ij[0], ij[1], read_matrix(val, c.dim(), c.dim(), p));
        }
      return a;
    }
    if (kind == "lie") {
      allow(j, path, {"kind", "algebra", "carrier", "operators"});
      a.kind = ActionKind::lie;
      const std::size_t n = p_->spaces.at(bracket_ref(j["algebra"], path + "/algebra", false, true).space).dim();
      need(j, path, "carrier");
      a.carrier = string_at(j["carrier"], path + "/carrier");
      const std::size_t m = p_->spaces.at(bracket_ref(j["carrier"], path + "/carrier", false, true).space).dim();
      a.operators.assign(n, Matrix(m, m));
      if (j.contains("operators"))
        for (auto& [key, val] : object_at(j["operators"], path + "/operators").items()) {
          const std::string p = path + "/operators/" + escape_pointer(key);
          a.operators[index_in(key, n, p)] = read_matrix(val, m, m, p);
        }
      return a;
    }
    if (kind == "leibniz-rep") {
      allow(j, path, {"kind", "algebra", "carrier", "left", "middle", "right"});
      a.kind = ActionKind::leibniz_rep;
      const std::size_t n = p_->spaces.at(bracket_ref(j["algebra"], path + "/algebra", true, false).space).dim();
      need(j, path, "carrier");
      const Space& c = space_ref(j["carrier"], path + "/carrier");
      a.carrier = c.name;
      for (auto [field, table] : {std::pair{"left", &a.left}, {"middle", &a.middle}, {"right", &a.right}}) {
        *table = j.contains(field) ? read_pair_table(j[field], n, c.dim(), path + "/" + field)
                                   : std::vector<Matrix>(n * n, Matrix(c.dim(), c.dim()));
      }
      return a;
    }
    fail(path + "/kind", "unknown action kind '" + kind + "'");
  }

  TensorDecl read_tensor(const json& j, const std::string& path) const {
    object_at(j, path);
    need(j, path, "source");
    need(j, path, "target");
    TensorDecl t;
    const Space& s = space_ref(j["source"], path + "/source");
    const Space& d = space_ref(j["target"], path + "/target");
    t.source = s.name;
    t.target = d.name;
    t.matrix = read_matrix(j, d.dim(), s.dim(), path, {"source", "target"});
    return t;
  }

  TraceDecl read_trace(const json& j, const std::string& path) const {
    object_at(j, path);
    allow(j, path, {"space", "coeffs"});
    need(j, path, "space");
    need(j, path, "coeffs");
    TraceDecl t;
    const Space& s = space_ref(j["space"], path + "/space");
    t.space = s.name;
    const json& arr = array_at(j["coeffs"], path + "/coeffs");
    if (arr.size() != s.dim()) fail(path + "/coeffs", "expected " + std::to_string(s.dim()) + " coefficients");
    t.coeffs = Vector(s.dim());
    for (std::size_t i = 0; i < arr.size(); ++i) t.coeffs[i] = scalar_at(arr[i], path + "/coeffs/" + std::to_string(i));
    return t;
  }

  std::string_view text_;
  std::string source_;
  const std::map<std::string, Scalar>& overrides_;
  std::map<std::string, Scalar> params_;
  PositionIndex index_;
  const ProblemFile* p_ = nullptr;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, const std::map<std::string, Scalar>& overrides,
                          const std::string& source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Position pos = position_at(text, e.byte ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
    throw InputError(source + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + what);
  }
  return Reader(text, source, overrides).read(root);
}

ProblemFile load_problem(const std::string& path, const std::map<std::string, Scalar>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), overrides, path);
}

// ---------------------------------------------------------------- views

const BracketDecl& ProblemFile::bracket(const std::string& n) const {
  auto it = brackets.find(n);
  if (it == brackets.end()) throw InputError("the problem has no bracket '" + n + "'");
  std::set<std::string> seen{n};
  while (it->second.alias) {
    const std::string next = *it->second.alias;
    it = brackets.find(next);
    if (it == brackets.end()) throw InputError("bracket alias '" + next + "' does not resolve");
    if (!seen.insert(next).second) throw InputError("alias cycle at bracket '" + next + "'");
  }
  return it->second;
}

const Space& ProblemFile::space_of_bracket(const std::string& n) const { return spaces.at(bracket(n).space); }

namespace {

[[noreturn]] void wrong_kind(const std::string& n, const std::string& want) {
  throw InputError("bracket '" + n + "' must be " + want);
}

}  // namespace

ThreeLieAlgebra ProblemFile::three_lie(const std::string& n) const {
  const BracketDecl& b = bracket(n);
  if (b.kind != BracketKind::ternary_alternating) wrong_kind(n, "ternary-alternating");
  return ThreeLieAlgebra{spaces.at(b.space), AlternatingTrilinearTable::from_general(b.ternary)};
}

ThreeLeibnizAlgebra ProblemFile::three_leibniz(const std::string& n) const {
  const BracketDecl& b = bracket(n);
  if (!b.is_ternary()) wrong_kind(n, "ternary");
  return ThreeLeibnizAlgebra{spaces.at(b.space), b.ternary};
}

LieAlgebra ProblemFile::lie(const std::string& n) const {
  const BracketDecl& b = bracket(n);
  if (b.kind != BracketKind::binary_alternating) wrong_kind(n, "binary-alternating");
  const std::size_t d = spaces.at(b.space).dim();
  AlternatingBilinearTable t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) t.set(i, j, b.binary.at(i, j));
  return LieAlgebra{spaces.at(b.space), std::move(t)};
}

LeibnizLieAlgebra ProblemFile::leibniz_lie(const std::string& lie_name, const std::string& triangle_name) const {
  LieAlgebra l = lie(lie_name);
  const BracketDecl& t = bracket(triangle_name);
  if (t.is_ternary()) wrong_kind(triangle_name, "binary");
  if (t.space != l.space.name) throw InputError("'" + triangle_name + "' and '" + lie_name + "' live on different spaces");
  return LeibnizLieAlgebra{std::move(l), t.binary};
}

ThreeLeibnizLieAlgebra ProblemFile::three_ll(const std::string& lie3_name, const std::string& braces_name) const {
  ThreeLieAlgebra a = three_lie(lie3_name);
  const BracketDecl& b = bracket(braces_name);
  if (!b.is_ternary()) wrong_kind(braces_name, "ternary");
  if (b.space != a.space.name) throw InputError("'" + braces_name + "' and '" + lie3_name + "' live on different spaces");
  return ThreeLeibnizLieAlgebra{std::move(a), b.ternary};
}

namespace {

const ActionDecl& find_action(const ProblemFile& p, const std::string& n) {
  auto it = p.actions.find(n);
  if (it == p.actions.end()) throw InputError("the problem has no action '" + n + "'");
  return it->second;
}

}  // namespace

RepresentationData ProblemFile::representation(const std::string& action) const {
  const ActionDecl& a = find_action(*this, action);
  if (a.kind == ActionKind::adjoint) {
    ThreeLieAlgebra alg = three_lie(a.algebra);
    PairAction ad = adjoint_action(alg);
    Space carrier = alg.space;
    return RepresentationData{std::move(alg), std::move(carrier), std::move(ad)};
  }
  if (a.kind != ActionKind::pair) throw InputError("action '" + action + "' must be a pair or adjoint action");
  return RepresentationData{three_lie(a.algebra), spaces.at(a.carrier), a.pair};
}

CoherentActionData ProblemFile::coherent_action(const std::string& action, const std::string& target_bracket) const {
  RepresentationData r = representation(action);
  ThreeLieAlgebra h = three_lie(target_bracket);
  if (h.space.name != r.carrier.name)
    throw InputError("bracket '" + target_bracket + "' is not on the carrier " + r.carrier.name + " of '" + action + "'");
  return CoherentActionData{std::move(r), std::move(h.bracket)};
}

EmbeddingTensorProblem ProblemFile::net(const std::string& action, const std::string& target_bracket,
                                        const std::string& t) const {
  CoherentActionData c = coherent_action(action, target_bracket);
  LinearMap m = tensor(t);
  if (m.source.name != c.rep.carrier.name || m.target.name != c.rep.algebra.space.name)
    throw InputError("tensor '" + t + "' must map " + c.rep.carrier.name + " -> " + c.rep.algebra.space.name);
  return EmbeddingTensorProblem{std::move(c), std::move(m)};
}

LieCoherentAction ProblemFile::lie_action(const std::string& action) const {
  const ActionDecl& a = find_action(*this, action);
  if (a.kind != ActionKind::lie) throw InputError("action '" + action + "' must be a lie action");
  return LieCoherentAction{lie(a.algebra), lie(a.carrier), a.operators};
}

ThreeLeibnizRep ProblemFile::leibniz_rep(const std::string& action) const {
  const ActionDecl& a = find_action(*this, action);
  if (a.kind != ActionKind::leibniz_rep) throw InputError("action '" + action + "' must be a leibniz-rep action");
  return ThreeLeibnizRep{three_leibniz(a.algebra), spaces.at(a.carrier), a.left, a.middle, a.right};
}

LinearMap ProblemFile::tensor(const std::string& n) const {
  auto it = tensors.find(n);
  if (it == tensors.end()) throw InputError("the problem has no tensor '" + n + "'");
  return LinearMap(spaces.at(it->second.source), spaces.at(it->second.target), it->second.matrix);
}

TraceMap ProblemFile::trace(const std::string& n) const {
  auto it = traces.find(n);
  if (it == traces.end()) throw InputError("the problem has no trace '" + n + "'");
  return TraceMap{spaces.at(it->second.space), it->second.coeffs};
}

// ---------------------------------------------------------------- emission

namespace {

std::string key_of(std::initializer_list<std::size_t> idx) {
  std::string out;
  for (std::size_t i : idx) out += (out.empty() ? "" : ",") + std::to_string(i + 1);
  return out;
}

json vector_json(const Vector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) out[std::to_string(i + 1)] = v[i].str();
  return out;
}

json matrix_json(const Matrix& m) {
  json entries = json::object();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) entries[key_of({r, c})] = m(r, c).str();
  return json{{"entries", entries}};
}

json pair_table_json(const std::vector<Matrix>& t, std::size_t n) {
  json out = json::object();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!t[a * n + b].is_zero()) out[key_of({a, b})] = matrix_json(t[a * n + b]);
  return out;
}

json bracket_json(const BracketDecl& b, std::size_t n) {
  if (b.alias) return json{{"alias", *b.alias}};
  json entries = json::object();
  const bool alt = b.kind == BracketKind::ternary_alternating || b.kind == BracketKind::binary_alternating;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = alt ? i + 1 : 0; j < n; ++j) {
      if (!b.is_ternary()) {
        if (!b.binary.at(i, j).is_zero()) entries[key_of({i, j})] = vector_json(b.binary.at(i, j));
        continue;
      }
      for (std::size_t k = alt ? j + 1 : 0; k < n; ++k)
        if (!b.ternary.at(i, j, k).is_zero()) entries[key_of({i, j, k})] = vector_json(b.ternary.at(i, j, k));
    }
  return json{{"kind", to_string(b.kind)}, {"space", b.space}, {"entries", entries}};
}

}  // namespace

std::string emit(const ProblemFile& p) {
  json root = json::object();
  if (!p.name.empty()) root["name"] = p.name;
  json spaces = json::object();
  for (auto& [n, s] : p.spaces) spaces[n] = json{{"dim", s.dim()}, {"labels", s.basis_labels}};
  root["spaces"] = spaces;
  if (!p.brackets.empty()) {
    json b = json::object();
    for (auto& [n, d] : p.brackets) b[n] = bracket_json(d, d.alias ? 0 : p.spaces.at(d.space).dim());
    root["brackets"] = b;
  }
  if (!p.actions.empty()) {
    json acts = json::object();
    for (auto& [n, a] : p.actions) {
      json j{{"kind", to_string(a.kind)}, {"algebra", a.algebra}};
      switch (a.kind) {
        case ActionKind::adjoint: break;
        case ActionKind::pair: {
          j["carrier"] = a.carrier;
          json e = json::object();
          for (std::size_t i = 0; i < a.pair.source_dim(); ++i)
            for (std::size_t k = i + 1; k < a.pair.source_dim(); ++k)
              if (!a.pair.at(i, k).is_zero()) e[key_of({i, k})] = matrix_json(a.pair.at(i, k));
          j["entries"] = e;
          break;
        }
        case ActionKind::lie: {
          j["carrier"] = a.carrier;
          json ops = json::object();
          for (std::size_t i = 0; i < a.operators.size(); ++i)
            if (!a.operators[i].is_zero()) ops[std::to_string(i + 1)] = matrix_json(a.operators[i]);
          j["operators"] = ops;
          break;
        }
        case ActionKind::leibniz_rep: {
          j["carrier"] = a.carrier;
          const std::size_t n = p.space_of_bracket(a.algebra).dim();
          j["left"] = pair_table_json(a.left, n);
          j["middle"] = pair_table_json(a.middle, n);
          j["right"] = pair_table_json(a.right, n);
          break;
        }
      }
      acts[n] = j;
    }
    root["actions"] = acts;
  }
  if (!p.tensors.empty()) {
    json t = json::object();
    for (auto& [n, d] : p.tensors) {
      json j = matrix_json(d.matrix);
      j["source"] = d.source;
      j["target"] = d.target;
      t[n] = j;
    }
    root["tensors"] = t;
  }
  if (!p.traces.empty()) {
    json t = json::object();
    for (auto& [n, d] : p.traces) {
      json c = json::array();
      for (std::size_t i = 0; i < d.coeffs.dim(); ++i) c.push_back(d.coeffs[i].str());
      t[n] = json{{"space", d.space}, {"coeffs", c}};
    }
    root["traces"] = t;
  }
  return root.dump(2) + "\n";
}

BracketDecl ternary_decl(const std::string& space, const TrilinearTable& t, bool alternating) {
  BracketDecl b;
  b.kind = alternating ? BracketKind::ternary_alternating : BracketKind::ternary;
  b.space = space;
  b.ternary = t;
  return b;
}

BracketDecl binary_decl(const std::string& space, const BilinearTable& t, bool alternating) {
  BracketDecl b;
  b.kind = alternating ? BracketKind::binary_alternating : BracketKind::binary;
  b.space = space;
  b.binary = t;
  return b;
}

TensorDecl tensor_decl(const LinearMap& m) { return TensorDecl{m.source.name, m.target.name, m.matrix}; }

}  // namespace tensorforge
