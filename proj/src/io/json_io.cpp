#include "skeinalg/io/json_io.hpp"

#include <fstream>
#include <limits>

#include "skeinalg/errors.hpp"

namespace skeinalg::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  if (j.size() != n) {
    schema(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  }
  return j;
}

std::map<std::string, QVec> labeled_vectors(const Json& j, std::size_t n, const char* what) {
  std::map<std::string, QVec> out;
  if (j.is_null()) return out;
  if (!j.is_object()) schema(std::string(what) + " must be an object");
  for (const auto& [label, v] : j.items()) out.emplace(label, vector_from_json(v, n));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      schema("bad integer '" + j.get<std::string>() + "'");
    }
  }
  schema("expected an integer");
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

const char* event_name(skein::EventKind k) {
  using skein::EventKind;
  switch (k) {
    case EventKind::id: return "id";
    case EventKind::cup: return "cup";
    case EventKind::cap: return "cap";
    case EventKind::cross_pos: return "cross+";
    case EventKind::cross_neg: return "cross-";
    case EventKind::twist_pos: return "twist+";
    case EventKind::twist_neg: return "twist-";
    case EventKind::coupon: return "coupon";
  }
  return "?";
}

skein::EventKind event_kind(const std::string& name) {
  using skein::EventKind;
  static const std::map<std::string, EventKind> kinds{
      {"id", EventKind::id},           {"cup", EventKind::cup},           {"cap", EventKind::cap},
      {"cross+", EventKind::cross_pos}, {"cross-", EventKind::cross_neg}, {"twist+", EventKind::twist_pos},
      {"twist-", EventKind::twist_neg}, {"coupon", EventKind::coupon}};
  auto it = kinds.find(name);
  if (it == kinds.end()) schema("unknown tangle event '" + name + "'");
  return it->second;
}

skein::Event event_from_json(const Json& j) {
  if (j.is_string()) {
    const auto kind = event_kind(j.get<std::string>());
    if (kind == skein::EventKind::coupon) schema("coupon events need a morphism");
    return skein::Event::of(kind);
  }
  if (j.is_object() && j.contains("coupon")) return skein::Event::make_coupon(tl_morphism_from_json(j.at("coupon")));
  schema("tangle event must be a name or {\"coupon\": morphism}");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  schema("rationals are \"p/q\" strings or integers");
}

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

QVec vector_from_json(const Json& j, std::size_t expected_size) {
  array_of(j, expected_size, "vector");
  QVec v;
  v.reserve(expected_size);
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  array_of(j, rows, "matrix");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const QVec row = vector_from_json(j[i], cols);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) schema("matrix must be a nonempty array of rows");
  return matrix_from_json(j, j.size(), j[0].size());
}

Json to_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      QVec row(a.constants().begin() + static_cast<long>((i * n + k) * n),
               a.constants().begin() + static_cast<long>((i * n + k + 1) * n));
      plane.push_back(to_json(row));
    }
    mult.push_back(std::move(plane));
  }
  return Json{{"dim", n}, {"mult", std::move(mult)}, {"unit", to_json(a.unit())}};
}

AlgebraPtr builtin_algebra(std::string_view name) {
  if (name == "K") return ground_field();
  if (name == "T2") return upper_triangular_algebra();
  if (name.size() >= 2 && (name[0] == 'M' || name[0] == 'D' || name[0] == 'P')) {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9' || n > 100) return nullptr;
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n == 0) return nullptr;
    if (name[0] == 'M') {
      if (n * n > DimensionLimits{}.algebra) throw ValidationError("M" + std::to_string(n) + " exceeds the algebra size cap");
      return matrix_algebra(n);
    }
    if (n > DimensionLimits{}.algebra) throw ValidationError(std::string(name) + " exceeds the algebra size cap");
    return name[0] == 'D' ? diagonal_algebra(n) : truncated_polynomial_algebra(n);
  }
  return nullptr;
}

AlgebraPtr algebra_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (auto builtin = builtin_algebra(name)) return builtin;
    const std::filesystem::path path = base_dir.empty() ? std::filesystem::path(name) : base_dir / name;
    return algebra_from_json(read_json_file(path), path.parent_path());
  }
  const std::size_t n = size_from_json(field(j, "dim"), "dim");
  if (n == 0) throw ValidationError("algebra dimension must be positive");
  if (n > DimensionLimits{}.algebra) throw ValidationError("algebra dimension " + std::to_string(n) + " exceeds the cap");
  const Json& mult = array_of(field(j, "mult"), n, "mult");
  std::vector<Rational> constants;
  constants.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    array_of(mult[i], n, "mult[i]");
    for (std::size_t k = 0; k < n; ++k) {
      const QVec row = vector_from_json(mult[i][k], n);
      constants.insert(constants.end(), row.begin(), row.end());
    }
  }
  return make_algebra(n, std::move(constants), vector_from_json(field(j, "unit"), n));
}

Json to_json(const AlgebraHom& f) {
  return Json{{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"matrix", to_json(f.matrix)}};
}

AlgebraHom hom_from_json(const Json& j, const std::filesystem::path& base_dir) {
  AlgebraPtr source = algebra_from_json(field(j, "source"), base_dir);
  AlgebraPtr target = algebra_from_json(field(j, "target"), base_dir);
  QMatrix m = matrix_from_json(field(j, "matrix"), target->dim(), source->dim());
  return make_algebra_hom(std::move(source), std::move(target), std::move(m));
}

Json to_json(const PointedBimodule& m) {
  Json left = Json::array();
  for (const auto& a : m.left_actions()) left.push_back(to_json(a));
  Json right = Json::array();
  for (const auto& b : m.right_actions()) right.push_back(to_json(b));
  return Json{{"left", to_json(*m.left_algebra())},
              {"right", to_json(*m.right_algebra())},
              {"dim", m.dim()},
              {"left_action", std::move(left)},
              {"right_action", std::move(right)},
              {"point", to_json(m.pointing())}};
}

PointedBimodule bimodule_from_json(const Json& j, const std::filesystem::path& base_dir) {
  AlgebraPtr left = algebra_from_json(field(j, "left"), base_dir);
  AlgebraPtr right = algebra_from_json(field(j, "right"), base_dir);
  const std::size_t dim = size_from_json(field(j, "dim"), "dim");
  if (dim > DimensionLimits{}.bimodule) throw ValidationError("bimodule dimension exceeds the cap");
  const Json& la = array_of(field(j, "left_action"), left->dim(), "left_action");
  const Json& ra = array_of(field(j, "right_action"), right->dim(), "right_action");
  std::vector<QMatrix> left_action;
  std::vector<QMatrix> right_action;
  for (const auto& m : la) left_action.push_back(matrix_from_json(m, dim, dim));
  for (const auto& m : ra) right_action.push_back(matrix_from_json(m, dim, dim));
  return make_bimodule(std::move(left), std::move(right), std::move(left_action), std::move(right_action),
                       vector_from_json(field(j, "point"), dim));
}

Json to_json(const tqft::System& s) {
  Json states = Json::object();
  for (const auto& [k, v] : s.states) states[k] = to_json(v);
  Json costates = Json::object();
  for (const auto& [k, v] : s.costates) costates[k] = to_json(v);
  Json observables = Json::object();
  for (const auto& [k, m] : s.observables) observables[k] = to_json(m);
  return Json{{"dim", s.dim},
              {"step", to_json(s.step)},
              {"states", std::move(states)},
              {"costates", std::move(costates)},
              {"observables", std::move(observables)}};
}

tqft::System system_from_json(const Json& j) {
  tqft::System s;
  s.dim = size_from_json(field(j, "dim"), "dim");
  if (s.dim == 0) throw ValidationError("system dimension must be positive");
  s.step = matrix_from_json(field(j, "step"), s.dim, s.dim);
  s.states = labeled_vectors(j.value("states", Json()), s.dim, "states");
  s.costates = labeled_vectors(j.value("costates", Json()), s.dim, "costates");
  if (j.contains("observables")) {
    const Json& obs = j.at("observables");
    if (!obs.is_object()) schema("observables must be an object");
    for (const auto& [label, m] : obs.items()) s.observables.emplace(label, matrix_from_json(m, s.dim, s.dim));
  }
  tqft::validate(s);
  return s;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) schema("Laurent polynomial must be an {\"exp\": coeff} object");
  LaurentPoly p;
  for (const auto& [key, c] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      schema("bad exponent '" + key + "'");
    }
    if (used != key.size()) schema("bad exponent '" + key + "'");
    p += LaurentPoly::monomial(e, integer_from_json(c));
  }
  return p;
}

Json to_json(const skein::TLMorphism& m) {
  Json terms = Json::array();
  for (const auto& [d, c] : m.terms()) terms.push_back(Json{{"matching", d.partners()}, {"coeff", to_json(c)}});
  return Json{{"n_bottom", m.n_bottom()}, {"n_top", m.n_top()}, {"terms", std::move(terms)}};
}

skein::TLMorphism tl_morphism_from_json(const Json& j) {
  const std::size_t nb = size_from_json(field(j, "n_bottom"), "n_bottom");
  const std::size_t nt = size_from_json(field(j, "n_top"), "n_top");
  if (nb + nt > std::numeric_limits<std::uint16_t>::max()) schema("diagram too large");
  skein::TLMorphism m(nb, nt);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) schema("terms must be an array");
  for (const auto& t : terms) {
    const Json& matching = array_of(field(t, "matching"), nb + nt, "matching");
    std::vector<std::uint16_t> partners;
    for (const auto& p : matching) {
      const std::size_t v = size_from_json(p, "matching entry");
      if (v >= nb + nt) schema("matching entry out of range");
      partners.push_back(static_cast<std::uint16_t>(v));
    }
    try {
      m.add(skein::TLDiagram(nb, nt, std::move(partners)), laurent_from_json(field(t, "coeff")));
    } catch (const ContractViolation& e) {
      throw ParseError(std::string("json: ") + e.what());
    }
  }
  return m;
}

Json to_json(const skein::AnnularClass& c) {
  Json out = Json::object();
  for (const auto& [k, p] : c.coefficients()) out[std::to_string(k)] = to_json(p);
  return out;
}

Json to_json(const skein::SliceTangle& t) {
  Json slices = Json::array();
  for (const auto& s : t.slices) {
    Json events = Json::array();
    for (const auto& e : s) {
      if (e.kind == skein::EventKind::coupon) {
        events.push_back(Json{{"coupon", to_json(*e.coupon)}});
      } else {
        events.push_back(event_name(e.kind));
      }
    }
    slices.push_back(Json{{"events", std::move(events)}});
  }
  return Json{{"strands_in", t.strands_in}, {"slices", std::move(slices)}};
}

skein::SliceTangle tangle_from_json(const Json& j) {
  skein::SliceTangle t;
  t.strands_in = size_from_json(field(j, "strands_in"), "strands_in");
  const Json& slices = field(j, "slices");
  if (!slices.is_array()) schema("slices must be an array");
  std::size_t width = t.strands_in;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    const Json& s = slices[k];
    skein::Slice slice;
    if (s.is_object()) {
      const Json& events = field(s, "events");
      if (!events.is_array()) schema("slice " + std::to_string(k) + ": events must be an array");
      for (const auto& e : events) slice.push_back(event_from_json(e));
    } else if (s.is_array() && !s.empty() && s[0].is_string() && s.size() <= 2) {
      const Json opts = s.size() == 2 ? s[1] : Json::object();
      if (!opts.is_object()) schema("slice " + std::to_string(k) + ": options must be an object");
      const std::size_t at = opts.contains("at") ? size_from_json(opts.at("at"), "at") : 0;
      const auto kind = event_kind(s[0].get<std::string>());
      skein::Event e = kind == skein::EventKind::coupon
                           ? skein::Event::make_coupon(tl_morphism_from_json(field(opts, "morphism")))
                           : skein::Event::of(kind);
      slice = skein::padded(std::move(e), at, width);
    } else {
      schema("slice " + std::to_string(k) + " must be [name, {\"at\": k}] or {\"events\": [...]}");
    }
    std::size_t in = 0;
    std::size_t out = 0;
    for (const auto& e : slice) {
      in += e.inputs();
      out += e.outputs();
    }
    if (in != width) {
      throw ShapeError("slice " + std::to_string(k) + " expects " + std::to_string(in) + " strands but receives " +
                       std::to_string(width));
    }
    width = out;
    t.slices.push_back(std::move(slice));
  }
  return t;
}

}  // namespace skeinalg::io
