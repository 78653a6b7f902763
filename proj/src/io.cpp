#include "convexlab/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"

namespace convexlab {

namespace {

// SAX consumer that builds a tree like the default one but stores floats as
// their literal text.
class ExactBuilder {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  explicit ExactBuilder(Json& root) : root_(root) {}

  bool null() { return put(nullptr); }
  bool boolean(bool v) { return put(v); }
  bool number_integer(number_integer_t v) { return put(v); }
  bool number_unsigned(number_unsigned_t v) { return put(v); }
  bool number_float(number_float_t, const string_t& text) { return put(text); }
  bool string(string_t& v) { return put(v); }
  bool binary(binary_t& v) { return put(Json::binary(v)); }
  bool start_object(std::size_t) {
    stack_.push_back(put_ref(Json::object()));
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(put_ref(Json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(position) + ": " + e.what());
  }

 private:
  Json* put_ref(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }
  bool put(Json value) {
    put_ref(std::move(value));
    return true;
  }

  Json& root_;
  std::vector<Json*> stack_;
  std::string key_;
};

QVector rational_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

IndexTuple index_tuple(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) throw InvalidInput("index tuple must be an array of integers");
  IndexTuple t;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("index tuple entries must be integers");
    t.push_back(x.get<std::int64_t>());
  }
  return t;
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("set description lacks \"") + name + "\"");
  return *it;
}

std::size_t read_dim(const Json& j, std::size_t fallback) {
  auto it = j.find("dim");
  if (it == j.end()) {
    if (fallback == 0) throw InvalidInput("set description needs \"dim\"");
    return fallback;
  }
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) throw InvalidInput("\"dim\" must be a positive integer");
  const auto dim = it->get<std::size_t>();
  if (fallback != 0 && dim != fallback) throw InvalidInput("\"dim\" disagrees with the listed coordinates");
  return dim;
}

Json vector_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json tuple_json(const IndexTuple& t) {
  Json a = Json::array();
  for (auto x : t) a.push_back(x);
  return a;
}

Json double_json(double x) {
  if (x == 0.0) return 0.0;  // no negative zero in reports
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json number_json(const ReportNumber& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return to_json(*q);
  return double_json(std::get<double>(x));
}

}  // namespace

Json parse_json_exact(std::string_view text) {
  Json root;
  ExactBuilder builder(root);
  Json::sax_parse(text.begin(), text.end(), &builder);
  return root;
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(Integer(std::to_string(value.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) return exact_from_double(value.get<double>());
  throw InvalidInput("expected a number or a rational string, got " + value.dump());
}

Json to_json(const Rational& value) { return to_string(value); }

SetDescription set_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("set description must be a JSON object");
  const auto kind = j.find("kind");
  if (kind == j.end() || !kind->is_string()) throw InvalidInput("set description needs a string \"kind\"");
  const std::string type = kind->get<std::string>();
  if (type == "vpolytope") {
    std::vector<QVector> vertices;
    for (const auto& v : field(j, "vertices")) vertices.push_back(rational_vector(v, "vertex"));
    if (vertices.empty()) throw InvalidInput("vpolytope needs at least one vertex");
    const std::size_t dim = read_dim(j, vertices.front().size());
    for (const auto& v : vertices) {
      if (v.size() != dim) throw InvalidInput("vertices have inconsistent dimensions");
    }
    return convex_hull(vertices);
  }
  if (type == "hpolytope") {
    std::vector<Halfspace> hs;
    for (const auto& h : field(j, "halfspaces")) hs.push_back({rational_vector(field(h, "normal"), "normal"),
                                                              rational_from_json(field(h, "offset"))});
    if (hs.empty()) throw InvalidInput("hpolytope needs halfspaces");
    const std::size_t dim = read_dim(j, hs.front().normal.size());
    auto v = vertex_enum(HPolytope(dim, std::move(hs), true));
    if (!v) throw InvalidInput("hpolytope is empty");
    return *v;
  }
  if (type == "simplex") {
    return make_simplex(read_dim(j, 0), j.contains("L") ? rational_from_json(j["L"]) : Rational(1));
  }
  if (type == "box") {
    return make_box(rational_vector(field(j, "lo"), "lo"), rational_vector(field(j, "hi"), "hi"));
  }
  if (type == "grid") {
    std::vector<IndexTuple> cells;
    for (const auto& c : field(j, "cells")) cells.push_back(index_tuple(c));
    const Rational h = rational_from_json(field(j, "cell"));
    std::size_t dim = read_dim(j, cells.empty() ? 0 : cells.front().size());
    QVector origin = j.contains("origin") ? rational_vector(j["origin"], "origin") : QVector(dim, h / 2);
    return GridSet(dim, h, std::move(origin), std::move(cells));
  }
  if (type == "lattice") {
    std::vector<IndexTuple> points;
    for (const auto& p : field(j, "points")) points.push_back(index_tuple(p));
    std::size_t dim = read_dim(j, points.empty() ? 0 : points.front().size());
    return LatticeSet(dim, std::move(points));
  }
  throw InvalidInput("unknown set kind '" + type + "'");
}

Json to_json(const VPolytope& p) {
  Json j;
  j["kind"] = "vpolytope";
  j["dim"] = p.dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(vector_json(v));
  j["vertices"] = std::move(vs);
  return j;
}

Json to_json(const GridSet& g) {
  Json j;
  j["kind"] = "grid";
  j["dim"] = g.dim();
  j["cell"] = to_json(g.cell());
  j["origin"] = vector_json(g.origin());
  Json cs = Json::array();
  for (const auto& c : g.cells()) cs.push_back(tuple_json(c));
  j["cells"] = std::move(cs);
  return j;
}

Json to_json(const LatticeSet& s) {
  Json j;
  j["kind"] = "lattice";
  j["dim"] = s.dim();
  Json ps = Json::array();
  for (const auto& p : s.points()) ps.push_back(tuple_json(p));
  j["points"] = std::move(ps);
  return j;
}

Json to_json(const SetDescription& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SetDescription load_set(const std::string& path) {
  try {
    return set_from_json(parse_json_exact(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json to_json(const VolumeEstimate& v) {
  Json j;
  j["value"] = double_json(v.value);
  j["exact"] = v.exact ? to_json(*v.exact) : Json(nullptr);
  j["kind"] = std::string(to_string(v.kind));
  j["stderr"] = double_json(v.std_error);
  j["samples"] = v.samples;
  j["seed"] = v.seed;
  return j;
}

Json to_json(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return to_json(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return double_json(x);
        } else {
          return x;
        }
      },
      v);
}

Json to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["lhs"] = number_json(r.lhs);
  j["rhs"] = number_json(r.rhs);
  j["ratio"] = double_json(r.ratio);
  j["errorBudget"] = double_json(r.error_budget);
  j["inputs"] = r.inputs;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = to_json(v);
  j["metrics"] = std::move(metrics);
  j["notes"] = r.notes;
  return j;
}

std::string csv_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_number(const ReportNumber& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return to_string(*q);
  return csv_double(std::get<double>(x));
}

std::string csv_escape(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const CheckReport& r) {
  return csv_escape(r.name) + "," + (r.pass ? "true" : "false") + "," + csv_number(r.lhs) + "," + csv_number(r.rhs) +
         "," + csv_double(r.ratio) + "," + csv_double(r.error_budget);
}

}  // namespace convexlab
