#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skeinalg/algebra/bimodule.hpp"
#include "skeinalg/errors.hpp"

namespace skeinalg::tqft {

/// Schrodinger-picture data: state space K^dim, one-step time evolution, and labeled
/// states (vectors), costates (covectors) and observables (matrices).
struct System {
  std::size_t dim = 0;
  QMatrix step;
  std::map<std::string, QVec> states;
  std::map<std::string, QVec> costates;
  std::map<std::string, QMatrix> observables;
};

/// Checks that every entry has the shape dictated by `dim`. Throws ValidationError.
void validate(const System& system);

enum class Boundary { empty, point };

enum class GeneratorKind { evolution, state, costate, observable };

struct Generator {
  GeneratorKind kind;
  long duration = 0;  // evolution only, >= 1
  std::string label;  // state/costate/observable

  Boundary source() const;
  Boundary target() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Composite of generators, written left to right and read as function composition: the
/// rightmost generator happens first. The empty word is the identity of the point.
class SpacetimeWord {
 public:
  SpacetimeWord() = default;
  /// Throws ComposabilityError naming the first bad adjacent pair.
  explicit SpacetimeWord(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }
  Boundary source() const;
  Boundary target() const;
  bool closed() const { return source() == Boundary::empty && target() == Boundary::empty; }

  /// this o rhs. Throws ComposabilityError.
  SpacetimeWord then_after(const SpacetimeWord& rhs) const;

  friend bool operator==(const SpacetimeWord&, const SpacetimeWord&) = default;

 private:
  std::vector<Generator> generators_;
};

class ComposabilityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// word := gen ("." gen)* ; gen := "u(" INT ")" | "v[" LBL "]" | "w[" LBL "]" | "a[" LBL "]".
/// Whitespace is ignored between tokens; blank text is the empty word.
SpacetimeWord parse_word(std::string_view text);
std::string to_string(const SpacetimeWord& word);

/// Matrix of the composite; a closed word yields a 1x1 matrix. Throws LabelError.
QMatrix eval_schrodinger(const System& system, const SpacetimeWord& word);

/// Pointed bimodule of the composite under End; a closed word yields a 1-dimensional K-K-bimodule.
PointedBimodule eval_heisenberg(const System& system, const SpacetimeWord& word);

struct PictureComparison {
  Rational schrodinger;
  Rational heisenberg;
  bool agree = false;
};

/// Evaluates a closed word in both pictures. Throws ContractViolation for an open word.
PictureComparison compare_pictures(const System& system, const SpacetimeWord& word);

/// Disjoint union of closed words: the product of their scalars.
Rational eval_disjoint_schrodinger(const System& system, const std::vector<SpacetimeWord>& words);
Rational eval_disjoint_heisenberg(const System& system, const std::vector<SpacetimeWord>& words);

/// Heisenberg-picture data given intrinsically: an algebra, its one-step evolution, and
/// distinguished ideals and elements.
struct HeisenbergData {
  AlgebraPtr algebra;
  AlgebraHom evolution;
  std::map<std::string, std::vector<QVec>> left_ideals;
  std::map<std::string, std::vector<QVec>> right_ideals;
  std::map<std::string, QVec> elements;
};

struct HeisenbergTable {
  std::vector<PointedBimodule> evolution;  // evolution[t-1] is the image of u(t)
  std::map<std::string, PointedBimodule> elements;
  std::map<std::string, PointedBimodule> left_ideals;
  std::map<std::string, PointedBimodule> right_ideals;
};

/// Builds the generator table for durations 1..max_duration. Each u(t) is the t-fold tensor
/// power of modulate(f), and is checked to be pointed-isomorphic to modulate(f^t).
HeisenbergTable system_from_heisenberg_data(const HeisenbergData& data, long max_duration,
                                            const InvertibleSearchOptions& options = {});

}  // namespace skeinalg::tqft
