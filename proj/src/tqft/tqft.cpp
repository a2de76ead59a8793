#include "skeinalg/tqft/tqft.hpp"

#include <cctype>
#include <sstream>

#include "skeinalg/algebra/end.hpp"

namespace skeinalg::tqft {

namespace {

const char* boundary_name(Boundary b) { return b == Boundary::point ? "pt" : "empty"; }

std::size_t boundary_dim(const System& system, Boundary b) { return b == Boundary::point ? system.dim : 1; }

QMatrix matrix_power(const QMatrix& m, long exponent) {
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& label, const char* what) {
  auto it = map.find(label);
  if (it == map.end()) throw LabelError(std::string("unknown ") + what + " label '" + label + "'");
  return it->second;
}

QMatrix generator_matrix(const System& system, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::evolution:
      return matrix_power(system.step, g.duration);
    case GeneratorKind::state: {
      const QVec& v = lookup(system.states, g.label, "state");
      return QMatrix(system.dim, 1, v);
    }
    case GeneratorKind::costate: {
      const QVec& w = lookup(system.costates, g.label, "costate");
      return QMatrix(1, system.dim, w);
    }
    case GeneratorKind::observable:
      return lookup(system.observables, g.label, "observable");
  }
  throw std::logic_error("unreachable generator kind");
}

PointedBimodule generator_bimodule(const System& system, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::evolution:
      return end_morphism(matrix_power(system.step, g.duration));
    case GeneratorKind::state:
      return state_module(lookup(system.states, g.label, "state"));
    case GeneratorKind::costate:
      return costate_module(lookup(system.costates, g.label, "costate"));
    case GeneratorKind::observable:
      return regular_bimodule(matrix_algebra(system.dim), flatten(lookup(system.observables, g.label, "observable")));
  }
  throw std::logic_error("unreachable generator kind");
}

void check_composable(const std::vector<Generator>& gens) {
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    if (gens[i].source() != gens[i + 1].target()) {
      std::ostringstream msg;
      msg << "generators " << i << " and " << i + 1 << " are not composable: " << boundary_name(gens[i + 1].source())
          << "->" << boundary_name(gens[i + 1].target()) << " cannot feed " << boundary_name(gens[i].source()) << "->"
          << boundary_name(gens[i].target());
      throw ComposabilityError(msg.str());
    }
  }
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Generator> parse() {
    std::vector<Generator> gens;
    skip_space();
    if (pos_ == text_.size()) return gens;
    gens.push_back(generator());
    skip_space();
    while (pos_ < text_.size()) {
      expect('.');
      skip_space();
      gens.push_back(generator());
      skip_space();
    }
    return gens;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Generator generator() {
    if (pos_ >= text_.size()) fail("expected a generator");
    const char head = text_[pos_++];
    switch (head) {
      case 'u': {
        expect('(');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a positive integer duration");
        if (pos_ - start > 9) fail("duration too large");
        const long t = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (t <= 0) fail("duration must be positive");
        expect(')');
        return Generator{GeneratorKind::evolution, t, {}};
      }
      case 'v':
      case 'w':
      case 'a': {
        expect('[');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-')) {
          ++pos_;
        }
        if (start == pos_) fail("expected a label");
        std::string label(text_.substr(start, pos_ - start));
        expect(']');
        const GeneratorKind kind = head == 'v'   ? GeneratorKind::state
                                   : head == 'w' ? GeneratorKind::costate
                                                 : GeneratorKind::observable;
        return Generator{kind, 0, std::move(label)};
      }
      default:
        --pos_;
        fail(std::string("unknown generator '") + head + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate(const System& system) {
  if (system.dim == 0) throw ValidationError("system dimension must be positive");
  if (system.step.rows() != system.dim || system.step.cols() != system.dim) {
    throw ValidationError("step must be dim x dim");
  }
  for (const auto& [label, v] : system.states)
    if (v.size() != system.dim) throw ValidationError("state '" + label + "' has wrong length");
  for (const auto& [label, w] : system.costates)
    if (w.size() != system.dim) throw ValidationError("costate '" + label + "' has wrong length");
  for (const auto& [label, a] : system.observables)
    if (a.rows() != system.dim || a.cols() != system.dim) {
      throw ValidationError("observable '" + label + "' must be dim x dim");
    }
}

Boundary Generator::source() const { return kind == GeneratorKind::state ? Boundary::empty : Boundary::point; }

Boundary Generator::target() const { return kind == GeneratorKind::costate ? Boundary::empty : Boundary::point; }

SpacetimeWord::SpacetimeWord(std::vector<Generator> generators) : generators_(std::move(generators)) {
  check_composable(generators_);
}

Boundary SpacetimeWord::source() const { return generators_.empty() ? Boundary::point : generators_.back().source(); }

Boundary SpacetimeWord::target() const { return generators_.empty() ? Boundary::point : generators_.front().target(); }

SpacetimeWord SpacetimeWord::then_after(const SpacetimeWord& rhs) const {
  std::vector<Generator> joined = generators_;
  joined.insert(joined.end(), rhs.generators_.begin(), rhs.generators_.end());
  return SpacetimeWord(std::move(joined));
}

SpacetimeWord parse_word(std::string_view text) { return SpacetimeWord(WordParser(text).parse()); }

std::string to_string(const SpacetimeWord& word) {
  std::ostringstream out;
  bool first = true;
  for (const auto& g : word.generators()) {
    if (!first) out << ".";
    first = false;
    switch (g.kind) {
      case GeneratorKind::evolution:
        out << "u(" << g.duration << ")";
        break;
      case GeneratorKind::state:
        out << "v[" << g.label << "]";
        break;
      case GeneratorKind::costate:
        out << "w[" << g.label << "]";
        break;
      case GeneratorKind::observable:
        out << "a[" << g.label << "]";
        break;
    }
  }
  return out.str();
}

QMatrix eval_schrodinger(const System& system, const SpacetimeWord& word) {
  QMatrix result = QMatrix::identity(boundary_dim(system, word.source()));
  const auto& gens = word.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) result = generator_matrix(system, *it) * result;
  return result;
}

PointedBimodule eval_heisenberg(const System& system, const SpacetimeWord& word) {
  const auto& gens = word.generators();
  if (gens.empty()) return regular_bimodule(matrix_algebra(system.dim));
  // Fold from the right so intermediate modules stay small.
  PointedBimodule result = generator_bimodule(system, gens.back());
  for (auto it = std::next(gens.rbegin()); it != gens.rend(); ++it) {
    result = tensor_over(generator_bimodule(system, *it), result);
  }
  return result;
}

PictureComparison compare_pictures(const System& system, const SpacetimeWord& word) {
  if (!word.closed()) throw ContractViolation("compare_pictures: word '" + to_string(word) + "' is not closed");
  PictureComparison cmp;
  cmp.schrodinger = eval_schrodinger(system, word)(0, 0);
  const PointedBimodule h = eval_heisenberg(system, word);
  if (h.dim() != 1) throw std::logic_error("closed word evaluated to a bimodule of dimension " + std::to_string(h.dim()));
  cmp.heisenberg = h.pointing()[0];
  cmp.agree = cmp.schrodinger == cmp.heisenberg;
  return cmp;
}

Rational eval_disjoint_schrodinger(const System& system, const std::vector<SpacetimeWord>& words) {
  Rational product = 1;
  for (const auto& w : words) {
    if (!w.closed()) throw ContractViolation("disjoint union components must be closed words");
    product *= eval_schrodinger(system, w)(0, 0);
  }
  return product;
}

Rational eval_disjoint_heisenberg(const System& system, const std::vector<SpacetimeWord>& words) {
  Rational product = 1;
  for (const auto& w : words) {
    if (!w.closed()) throw ContractViolation("disjoint union components must be closed words");
    product *= eval_heisenberg(system, w).pointing()[0];
  }
  return product;
}

HeisenbergTable system_from_heisenberg_data(const HeisenbergData& data, long max_duration,
                                            const InvertibleSearchOptions& options) {
  if (!same_algebra(data.evolution.source, data.algebra) || !same_algebra(data.evolution.target, data.algebra)) {
    throw ContractViolation("evolution must be an endomorphism of the observable algebra");
  }
  HeisenbergTable table;
  const PointedBimodule step = modulate(data.evolution);
  AlgebraHom power = data.evolution;
  for (long t = 1; t <= max_duration; ++t) {
    PointedBimodule current = t == 1 ? step : tensor_over(table.evolution.back(), step);
    if (t > 1) power = compose(data.evolution, power);
    if (!bimodule_iso_pointed(current, modulate(power), options)) {
      throw std::logic_error("u(" + std::to_string(t) + ") is not pointed-isomorphic to the modulation of f^t");
    }
    table.evolution.push_back(std::move(current));
  }
  for (const auto& [label, a] : data.elements) table.elements.emplace(label, regular_bimodule(data.algebra, a));
  for (const auto& [label, basis] : data.left_ideals) {
    table.left_ideals.emplace(label, ideal_quotient_module(data.algebra, basis, IdealSide::left));
  }
  for (const auto& [label, basis] : data.right_ideals) {
    table.right_ideals.emplace(label, ideal_quotient_module(data.algebra, basis, IdealSide::right));
  }
  return table;
}

}  // namespace skeinalg::tqft
