#include "skeinalg/checks/criteria.hpp"

#include <sstream>

#include "skeinalg/algebra/end.hpp"
#include "skeinalg/checks/random_instances.hpp"
#include "skeinalg/errors.hpp"
#include "skeinalg/io/json_io.hpp"
#include "skeinalg/linalg/elimination.hpp"
#include "skeinalg/linalg/invertible_search.hpp"
#include "skeinalg/skein/ribbon.hpp"
#include "skeinalg/skein/state_sum.hpp"

namespace skeinalg::checks {

namespace {

using namespace skein;

/// Accumulates per-instance outcomes, keeping the first failure message.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  template <typename Fn>
  void run(Fn&& instance) {
    ++result_.instances;
    std::string why;
    try {
      why = instance();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      ++result_.failures;
      if (first_.empty()) first_ = "instance " + std::to_string(result_.instances - 1) + ": " + why;
    }
  }

  CheckResult finish(std::string summary = {}) {
    result_.passed = result_.failures == 0 && result_.instances > 0;
    result_.detail = result_.failures == 0 ? std::move(summary) : first_;
    return result_;
  }

 private:
  CheckResult result_;
  std::string first_;
};

std::string fail_if(bool bad, const std::string& message) { return bad ? message : std::string(); }

LaurentPoly braid_bracket(const BraidWord& w, std::size_t n) {
  return plane_closure(interpret_tangle(braid_to_slices(w, n)));
}

BraidWord spliced(const BraidWord& w, std::size_t at, const BraidWord& piece) {
  BraidWord out(w.begin(), w.begin() + static_cast<long>(at));
  out.insert(out.end(), piece.begin(), piece.end());
  out.insert(out.end(), w.begin() + static_cast<long>(at), w.end());
  return out;
}

/// Kink on strand `strand` inserted before slice `level`.
SliceTangle with_kink(const SliceTangle& t, std::size_t level, std::size_t strand, int sign) {
  const auto widths = t.widths();
  const std::size_t w = level == 0 ? t.strands_in : widths[level - 1];
  Slice open(strand + 1, Event::of(EventKind::id));
  open.push_back(Event::of(EventKind::cup));
  open.insert(open.end(), w - strand - 1, Event::of(EventKind::id));
  SliceTangle out{t.strands_in, {}};
  out.slices.assign(t.slices.begin(), t.slices.begin() + static_cast<long>(level));
  out.slices.push_back(open);
  out.slices.push_back(padded(Event::of(sign > 0 ? EventKind::cross_pos : EventKind::cross_neg), strand, w + 2));
  out.slices.push_back(padded(Event::of(EventKind::cap), strand + 1, w + 2));
  out.slices.insert(out.slices.end(), t.slices.begin() + static_cast<long>(level), t.slices.end());
  return out;
}

std::size_t catalan(std::size_t k) {
  std::vector<std::size_t> c(k + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= k; ++n)
    for (std::size_t i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  return c[k];
}

std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

IdentityReport filtered(const IdentityReport& r, std::initializer_list<const char*> prefixes) {
  IdentityReport out;
  for (const auto& c : r.checks)
    for (const char* p : prefixes)
      if (c.name.rfind(p, 0) == 0) out.checks.push_back(c);
  return out;
}

CheckResult identity_result(const std::string& name, const IdentityReport& r) {
  Tally t(name);
  for (const auto& c : r.checks) {
    t.run([&] { return c.holds() ? std::string() : c.name + ": lhs " + to_string(c.lhs) + " rhs " + to_string(c.rhs); });
  }
  return t.finish(std::to_string(r.checks.size()) + " identities exact");
}

// ---------------------------------------------------------------- criteria

CheckResult picture_equivalence(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("picture equivalence");
  std::size_t singular = 0;
  for (std::size_t i = 0; i < s.systems; ++i) {
    const std::size_t dim = random_index(rng, 1, s.max_system_dim);
    const tqft::System sys = random_system(rng, dim, i < s.singular_systems);
    if (!is_invertible(sys.step)) ++singular;
    const tqft::SpacetimeWord word = random_closed_word(rng, sys, s.max_word_length);
    t.run([&] {
      const auto cmp = tqft::compare_pictures(sys, word);
      return fail_if(!cmp.agree, tqft::to_string(word) + ": schrodinger " + to_string(cmp.schrodinger) +
                                     " heisenberg " + to_string(cmp.heisenberg));
    });
  }
  t.run([&] {
    return fail_if(singular < s.singular_systems, "only " + std::to_string(singular) + " systems had singular steps");
  });
  return t.finish(std::to_string(s.systems) + " systems (" + std::to_string(singular) + " singular steps), exact agreement");
}

CheckResult conjugator_agreement(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("unpointed iso vs conjugator");
  std::size_t present = 0;
  for (std::size_t i = 0; i < s.hom_pairs; ++i) {
    const HomPair pair = random_hom_pair(rng);
    InvertibleSearchOptions opts;
    opts.seed = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    t.run([&] {
      const bool iso = bimodule_iso_unpointed(modulate(pair.f), modulate(pair.g), opts).has_value();
      const bool conj = find_conjugator(pair.f, pair.g, opts).has_value();
      present += iso ? 1 : 0;
      if (iso != conj) return pair.family + ": iso " + std::to_string(iso) + " but conjugator " + std::to_string(conj);
      return fail_if(iso != pair.conjugate, pair.family + ": search disagrees with the constructed answer");
    });
  }
  std::ostringstream summary;
  summary << s.hom_pairs << " pairs, " << present << " conjugate, " << s.hom_pairs - present
          << " not; per-search false-negative bound " << InvertibleSearchOptions{}.false_negative_bound(16);
  return t.finish(summary.str());
}

CheckResult conjugation_modulation(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("modulation of conjugation");
  for (std::size_t i = 0; i < s.conjugations; ++i) {
    const std::size_t n = s.include_m3 && i % 2 == 1 ? 3 : 2;
    const QMatrix u = random_invertible(rng, n);
    t.run([&] {
      const PointedBimodule m = modulate(conjugation_hom(u));
      const PointedBimodule r = regular_bimodule(matrix_algebra(n), flatten(u));
      const auto w = bimodule_iso_pointed(m, r);
      if (!w) return std::string("no witness for M") + std::to_string(n);
      return fail_if(!is_pointed_iso(*w, m, r), "witness failed verification");
    });
  }
  return t.finish(std::to_string(s.conjugations) + " witnesses verified");
}

CheckResult functoriality(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("modulation and End functoriality");
  for (std::size_t i = 0; i < s.composable_pairs; ++i) {
    const auto [f, g] = random_composable_homs(rng);
    t.run([&] {
      const TensorProduct tp = tensor_over_detailed(modulate(f), modulate(g));
      const AlgebraPtr& b = f.target;
      const AlgebraPtr& c = g.target;
      const QMatrix witness = map_from_representatives(
          tp, c->dim(), [&](std::size_t p, std::size_t r) { return c->multiply(g(b->basis(p)), c->basis(r)); });
      return fail_if(!is_pointed_iso(witness, tp.module, modulate(compose(g, f))), "modulation witness rejected");
    });
    const std::size_t dv = random_index(rng, 1, s.max_space_dim);
    const std::size_t dw = random_index(rng, 1, s.max_space_dim);
    const std::size_t dx = random_index(rng, 1, s.max_space_dim);
    const QMatrix fm = random_matrix(rng, dw, dv);
    const QMatrix gm = random_matrix(rng, dx, dw);
    t.run([&] {
      const EndCompositionReport r = end_compose_check(fm, gm);
      return fail_if(!r.ok || !r.witness, "End composite: " + r.message);
    });
  }
  return t.finish(std::to_string(s.composable_pairs) + " modulation pairs and " + std::to_string(s.composable_pairs) +
                  " End pairs, witnesses verified");
}

CheckResult tl_dimensions(const Scale& s, std::uint64_t) {
  Tally t("TL hom-space dimensions");
  std::ostringstream counts;
  for (std::size_t total = 0; total <= s.tl_max_total; ++total) {
    const std::size_t expected = total % 2 ? 0 : catalan(total / 2);
    if (total % 2 == 0) counts << (total ? ", " : "") << expected;
    for (std::size_t nb = 0; nb <= total; ++nb) {
      t.run([&] {
        const std::size_t got = tl_basis(nb, total - nb).size();
        return fail_if(got != expected, "(" + std::to_string(nb) + "," + std::to_string(total - nb) + ") has " +
                                            std::to_string(got) + " diagrams, expected " + std::to_string(expected));
      });
    }
  }
  return t.finish("Catalan counts " + counts.str());
}

CheckResult tl_relations(const Scale& s, std::uint64_t) {
  IdentityReport r = tl_relation_checks(s.tl_relations_n);
  const IdentityReport yb = filtered(ribbon_axiom_checks(3), {"yang-baxter"});
  r.checks.insert(r.checks.end(), yb.checks.begin(), yb.checks.end());
  return identity_result("TL relations and Yang-Baxter", r);
}

CheckResult kauffman_invariance(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("Kauffman invariance");
  std::size_t r2 = 0;
  std::size_t r3 = 0;
  for (std::size_t i = 0; i < s.reidemeister_insertions; ++i) {
    const std::size_t n = random_index(rng, 2, s.max_braid_strands);
    const BraidWord w = random_braid(rng, n, s.max_braid_crossings);
    const std::size_t at = random_index(rng, 0, w.size());
    if (n >= 3 && rng() % 2 == 0) {
      ++r3;
      const int g = static_cast<int>(random_index(rng, 1, n - 2));
      static const int patterns[3][2][3] = {{{1, 2, 1}, {2, 1, 2}}, {{-1, -2, -1}, {-2, -1, -2}}, {{1, 2, -1}, {-2, 1, 2}}};
      const auto& p = patterns[rng() % 3];
      BraidWord lhs;
      BraidWord rhs;
      for (int k = 0; k < 3; ++k) {
        lhs.push_back(p[0][k] > 0 ? g + p[0][k] - 1 : -(g - p[0][k] - 1));
        rhs.push_back(p[1][k] > 0 ? g + p[1][k] - 1 : -(g - p[1][k] - 1));
      }
      t.run([&] {
        return fail_if(braid_bracket(spliced(w, at, lhs), n) != braid_bracket(spliced(w, at, rhs), n),
                       "R3 move " + braid_to_string(lhs) + " -> " + braid_to_string(rhs) + " in " + braid_to_string(w));
      });
    } else {
      ++r2;
      const int g = static_cast<int>(random_index(rng, 1, n - 1));
      const int sign = rng() % 2 ? 1 : -1;
      t.run([&] {
        return fail_if(braid_bracket(spliced(w, at, {sign * g, -sign * g}), n) != braid_bracket(w, n),
                       "R2 insertion into " + braid_to_string(w));
      });
    }
  }
  for (std::size_t i = 0; i < s.r1_moves; ++i) {
    const std::size_t n = random_index(rng, 1, 3);
    const BraidWord w = random_braid(rng, n, s.max_braid_crossings - 1);
    const int sign = rng() % 2 ? 1 : -1;
    const SliceTangle closed = braid_closure(w, n);
    const std::size_t level = random_index(rng, n, n + w.size());
    const std::size_t strand = random_index(rng, 0, n - 1);
    t.run([&] {
      const LaurentPoly before = kauffman_bracket(closed);
      const LaurentPoly kinked = kauffman_bracket(with_kink(closed, level, strand, sign));
      if (kinked != before * twist_scalar(sign)) return "R1 kink on " + braid_to_string(w);
      BraidWord stabilized = w;
      stabilized.push_back(sign * static_cast<int>(n));
      return fail_if(braid_bracket(stabilized, n + 1) != braid_bracket(w, n) * twist_scalar(sign),
                     "R1 stabilization of " + braid_to_string(w));
    });
  }
  std::vector<SliceTangle> corpus;
  for (const auto& entry : braid_corpus()) corpus.push_back(braid_closure(entry.word, entry.strands));
  for (std::size_t i = 0; i < s.random_corpus; ++i) {
    const std::size_t n = random_index(rng, 1, 3);
    SliceTangle c = braid_closure(random_braid(rng, n, s.corpus_max_crossings - 1), n);
    if (i % 3 == 0) c = with_kink(c, n, 0, rng() % 2 ? 1 : -1);
    corpus.push_back(std::move(c));
  }
  for (const auto& c : corpus) {
    if (c.crossing_count() > s.corpus_max_crossings) continue;
    t.run([&] {
      const LaurentPoly direct = kauffman_bracket(c);
      return fail_if(direct != bracket_state_sum_serial(c) || direct != bracket_state_sum_parallel(c),
                     "state sum disagrees on a " + std::to_string(c.crossing_count()) + "-crossing tangle");
    });
  }
  std::ostringstream summary;
  summary << r2 << " R2 + " << r3 << " R3 insertions, " << s.r1_moves << " R1 moves, " << corpus.size()
          << " corpus tangles vs state sum";
  return t.finish(summary.str());
}

CheckResult ribbon_axioms(const Scale&, std::uint64_t) {
  return identity_result("ribbon axioms",
                         filtered(ribbon_axiom_checks(2), {"full-twist naturality", "quadratic twist equation"}));
}

CheckResult annulus(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("annulus");
  for (std::size_t n = 0; n <= s.annulus_max_identity; ++n) {
    t.run([&] {
      return fail_if(annulus_closure_eval(TLMorphism::identity(n)) != AnnularClass::z_power(static_cast<int>(n)),
                     "id_" + std::to_string(n) + " does not close to z^" + std::to_string(n));
    });
  }
  for (std::size_t i = 0; i < s.annulus_pairs; ++i) {
    const std::size_t n1 = random_index(rng, 1, 3);
    const std::size_t n2 = random_index(rng, 1, 3);
    const BraidWord w1 = random_braid(rng, n1, s.annulus_max_crossings);
    const BraidWord w2 = random_braid(rng, n2, s.annulus_max_crossings);
    t.run([&] {
      const TLMorphism m1 = interpret_tangle(braid_to_slices(w1, n1));
      const TLMorphism m2 = interpret_tangle(braid_to_slices(w2, n2));
      return fail_if(annulus_closure_eval(tl_tensor(m1, m2)) != annulus_closure_eval(m1) * annulus_closure_eval(m2),
                     "nested union of " + braid_to_string(w1) + " and " + braid_to_string(w2));
    });
  }
  return t.finish("z^n for n <= " + std::to_string(s.annulus_max_identity) + ", " + std::to_string(s.annulus_pairs) +
                  " nested pairs multiplicative");
}

CheckResult projectivity(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("projectivity");
  for (std::size_t i = 0; i < s.projectivity; ++i) {
    const std::size_t n = s.include_m3 && i % 2 == 1 ? 3 : 2;
    const QMatrix u = random_invertible(rng, n);
    const Rational lambda = random_scalar(rng);
    QVec v = random_matrix(rng, n, 1).column(0);
    v[0] += 1;  // keep v away from zero most of the time; zero is also a valid instance
    const QVec w = random_matrix(rng, 1, n).transpose().column(0);
    t.run([&] {
      if (modulate(conjugation_hom(u * lambda)) != modulate(conjugation_hom(u))) return std::string("modulation changed");
      QVec lv = v;
      QVec lw = w;
      for (auto& x : lv) x *= lambda;
      for (auto& x : lw) x *= lambda;
      if (!same_subspace(n * n, annihilator_left(n, lv), annihilator_left(n, v))) return std::string("Ann(v) changed");
      return fail_if(!same_subspace(n * n, annihilator_right(n, lw), annihilator_right(n, w)), "Ann(w) changed");
    });
  }
  return t.finish(std::to_string(s.projectivity) + " rescalings, exact equality");
}

// ---------------------------------------------------------------- other invariants

CheckResult linalg_invariants(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("exact linear algebra");
  for (std::size_t i = 0; i < s.property_trials; ++i) {
    const std::size_t r = random_index(rng, 1, 5);
    const std::size_t c = random_index(rng, 1, 6);
    QMatrix m = random_matrix(rng, r, c);
    if (i % 3 == 0)
      for (std::size_t k = 0; k < c; ++k) m(r - 1, k) = m(0, k) * 2;
    t.run([&] {
      if (rank(m) + kernel_basis(m).size() != c) return std::string("rank + nullity != cols");
      const QMatrix once = rref(m).reduced;
      if (rref(once).reduced != once) return std::string("rref not idempotent");
      std::vector<QVec> rel;
      for (std::size_t k = 0; k < r; ++k) rel.push_back(m.transpose().column(k));
      const auto qb = quotient_basis(c, rel);
      for (const auto& x : rel)
        if (!is_zero_vector(qb.projection * x)) return std::string("projection does not kill a relation");
      return fail_if(rank(qb.projection) != c - rank(m), "projection rank");
    });
    auto poly = [&] {
      LaurentPoly p;
      for (int k = 0; k < 3; ++k)
        p += LaurentPoly::monomial(static_cast<int>(random_index(rng, 0, 12)) - 6, static_cast<long>(rng() % 7) - 3);
      return p;
    };
    const LaurentPoly a = poly();
    const LaurentPoly b = poly();
    const LaurentPoly d = poly();
    t.run([&] {
      if (a * b != b * a) return std::string("Laurent product not commutative");
      if ((a * b) * d != a * (b * d)) return std::string("Laurent product not associative");
      return fail_if(a * (b + d) != a * b + a * d, "Laurent product not distributive");
    });
  }
  return t.finish(std::to_string(s.property_trials) + " random matrices and Laurent triples");
}

CheckResult validation_complete(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("validation completeness");
  const std::vector<AlgebraPtr> algebras{ground_field(),          matrix_algebra(2),
                                         diagonal_algebra(3),     truncated_polynomial_algebra(3),
                                         upper_triangular_algebra(), matrix_algebra(s.include_m3 ? 3 : 2)};
  for (std::size_t i = 0; i < s.property_trials; ++i) {
    const AlgebraPtr a = algebras[i % algebras.size()];
    const std::size_t n = a->dim();
    std::vector<Rational> c = a->constants();
    const std::size_t at = random_index(rng, 0, c.size() - 1);
    c[at] += random_scalar(rng);
    t.run([&] {
      bool rejected = false;
      try {
        make_algebra(n, c, a->unit());
      } catch (const ValidationError&) {
        rejected = true;
      }
      // Oracle: brute-force associativity and unit laws on the perturbed table.
      auto at3 = [&](std::size_t i1, std::size_t j1, std::size_t k1) -> const Rational& { return c[(i1 * n + j1) * n + k1]; };
      bool valid = true;
      for (std::size_t i1 = 0; i1 < n && valid; ++i1)
        for (std::size_t j1 = 0; j1 < n && valid; ++j1)
          for (std::size_t k1 = 0; k1 < n && valid; ++k1)
            for (std::size_t l = 0; l < n && valid; ++l) {
              Rational lhs = 0;
              Rational rhs = 0;
              for (std::size_t m = 0; m < n; ++m) {
                lhs += at3(i1, j1, m) * at3(m, k1, l);
                rhs += at3(j1, k1, m) * at3(i1, m, l);
              }
              valid = lhs == rhs;
            }
      for (std::size_t j1 = 0; j1 < n && valid; ++j1)
        for (std::size_t k1 = 0; k1 < n && valid; ++k1) {
          Rational left = 0;
          Rational right = 0;
          for (std::size_t i1 = 0; i1 < n; ++i1) {
            left += a->unit()[i1] * at3(i1, j1, k1);
            right += a->unit()[i1] * at3(j1, i1, k1);
          }
          const Rational expect = j1 == k1 ? 1 : 0;
          valid = left == expect && right == expect;
        }
      return fail_if(rejected == valid, rejected ? "valid table rejected" : "invalid table accepted");
    });
  }
  return t.finish(std::to_string(s.property_trials) + " perturbed tables judged like the brute-force oracle");
}

PointedBimodule random_pointed(Rng& rng, std::size_t max_dim) {
  const std::size_t dv = random_index(rng, 1, max_dim);
  const std::size_t dw = random_index(rng, 1, max_dim);
  const PointedBimodule e = end_morphism(random_matrix(rng, dw, dv));
  return e.with_pointing(random_matrix(rng, e.dim(), 1).column(0));
}

CheckResult tensor_laws(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("unit and associativity laws of the tensor product");
  for (std::size_t i = 0; i < s.property_trials / 2; ++i) {
    const PointedBimodule m = random_pointed(rng, 3);
    t.run([&] {
      if (!bimodule_iso_pointed(tensor_over(regular_bimodule(m.left_algebra()), m), m)) return std::string("left unit");
      return fail_if(!bimodule_iso_pointed(tensor_over(m, regular_bimodule(m.right_algebra())), m), "right unit");
    });
    const std::size_t d0 = random_index(rng, 1, 2);
    const std::size_t d1 = random_index(rng, 1, 2);
    const std::size_t d2 = random_index(rng, 1, 2);
    const std::size_t d3 = random_index(rng, 1, 2);
    const PointedBimodule h = end_morphism(random_matrix(rng, d3, d2));
    const PointedBimodule g = end_morphism(random_matrix(rng, d2, d1));
    const PointedBimodule f = end_morphism(random_matrix(rng, d1, d0));
    t.run([&] {
      return fail_if(!bimodule_iso_pointed(tensor_over(tensor_over(h, g), f), tensor_over(h, tensor_over(g, f))),
                     "associativity");
    });
  }
  return t.finish(std::to_string(s.property_trials) + " unit and associativity instances");
}

CheckResult tqft_laws(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("functoriality, group law and rescaling");
  for (std::size_t i = 0; i < s.property_trials / 2; ++i) {
    const std::size_t dim = random_index(rng, 1, s.max_system_dim);
    tqft::System sys = random_system(rng, dim, i % 2 == 0);
    const tqft::SpacetimeWord word = random_closed_word(rng, sys, s.max_word_length);
    const std::size_t cut = random_index(rng, 1, word.size() - 1);
    const auto& g = word.generators();
    const tqft::SpacetimeWord left({g.begin(), g.begin() + static_cast<long>(cut)});
    const tqft::SpacetimeWord right({g.begin() + static_cast<long>(cut), g.end()});
    t.run([&] {
      if (eval_schrodinger(sys, word) != eval_schrodinger(sys, left) * eval_schrodinger(sys, right)) {
        return "schrodinger split of " + tqft::to_string(word);
      }
      return fail_if(!bimodule_iso_pointed(tensor_over(eval_heisenberg(sys, left), eval_heisenberg(sys, right)),
                                           eval_heisenberg(sys, word)),
                     "heisenberg split of " + tqft::to_string(word));
    });
    const long a = static_cast<long>(random_index(rng, 1, 3));
    const long b = static_cast<long>(random_index(rng, 1, 3));
    t.run([&] {
      const auto split = tqft::parse_word("u(" + std::to_string(a) + ").u(" + std::to_string(b) + ")");
      const auto joined = tqft::parse_word("u(" + std::to_string(a + b) + ")");
      if (eval_schrodinger(sys, split) != eval_schrodinger(sys, joined)) return std::string("schrodinger group law");
      return fail_if(!bimodule_iso_pointed(eval_heisenberg(sys, split), eval_heisenberg(sys, joined)),
                     "heisenberg group law");
    });
    const Rational ls = random_scalar(rng);
    const Rational lv = random_scalar(rng);
    const Rational lw = random_scalar(rng);
    t.run([&] {
      std::size_t steps = 0;
      for (const auto& gen : word.generators())
        if (gen.kind == tqft::GeneratorKind::evolution) steps += static_cast<std::size_t>(gen.duration);
      const Rational before = eval_schrodinger(sys, word)(0, 0);
      tqft::System scaled = sys;
      scaled.step = scaled.step * ls;
      for (auto& [k, v] : scaled.states)
        for (auto& x : v) x *= lv;
      for (auto& [k, w] : scaled.costates)
        for (auto& x : w) x *= lw;
      Rational expected = before * lv * lw;
      for (std::size_t k = 0; k < steps; ++k) expected *= ls;
      const auto cmp = tqft::compare_pictures(scaled, word);
      return fail_if(cmp.schrodinger != expected || !cmp.agree, "rescaling " + tqft::to_string(word));
    });
  }
  return t.finish(std::to_string(s.property_trials / 2) + " words split, composed and rescaled");
}

TLMorphism random_tl(Rng& rng, std::size_t nb, std::size_t nt) {
  TLMorphism m(nb, nt);
  for (const auto& d : tl_basis(nb, nt)) {
    if (rng() % 2) continue;
    m.add(d, LaurentPoly::monomial(static_cast<int>(random_index(rng, 0, 6)) - 3, static_cast<long>(rng() % 5) - 2));
  }
  return m;
}

CheckResult tl_algebra_laws(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("bilinearity, associativity and interchange");
  for (std::size_t i = 0; i < s.property_trials / 2; ++i) {
    const TLMorphism f = random_tl(rng, 1, 3);
    const TLMorphism f2 = random_tl(rng, 1, 3);
    const TLMorphism g = random_tl(rng, 3, 3);
    const TLMorphism h = random_tl(rng, 3, 1);
    const LaurentPoly c = LaurentPoly::monomial(static_cast<int>(random_index(rng, 0, 4)) - 2, 3);
    t.run([&] {
      if (tl_compose(tl_compose(f, g), h) != tl_compose(f, tl_compose(g, h))) return std::string("compose associativity");
      if (tl_compose(f + f2 * c, g) != tl_compose(f, g) + tl_compose(f2, g) * c) return std::string("compose linearity");
      if (tl_tensor(tl_tensor(f, h), g) != tl_tensor(f, tl_tensor(h, g))) return std::string("tensor associativity");
      if (tl_tensor(f + f2, h) != tl_tensor(f, h) + tl_tensor(f2, h)) return std::string("tensor linearity");
      const TLMorphism p = random_tl(rng, 2, 2);
      const TLMorphism p2 = random_tl(rng, 2, 2);
      const TLMorphism q = random_tl(rng, 1, 1);
      const TLMorphism q2 = random_tl(rng, 1, 3);
      return fail_if(tl_compose(tl_tensor(p, q), tl_tensor(p2, q2)) != tl_tensor(tl_compose(p, p2), tl_compose(q, q2)),
                     "interchange law");
    });
  }
  return t.finish(std::to_string(s.property_trials / 2) + " random triples");
}

CheckResult locality(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("locality under coupon replacement");
  for (std::size_t i = 0; i < s.property_trials / 2; ++i) {
    const std::size_t n = random_index(rng, 1, 3);
    SliceTangle tangle = i % 2 ? braid_closure(random_braid(rng, n, 4), n)
                               : braid_to_slices(random_braid(rng, std::max<std::size_t>(n, 2), 5), std::max<std::size_t>(n, 2));
    if (tangle.slices.empty()) continue;
    const std::size_t a = random_index(rng, 0, tangle.slices.size() - 1);
    const std::size_t b = random_index(rng, a + 1, tangle.slices.size());
    t.run([&] {
      const auto widths = tangle.widths();
      SliceTangle piece{a == 0 ? tangle.strands_in : widths[a - 1], {}};
      piece.slices.assign(tangle.slices.begin() + static_cast<long>(a), tangle.slices.begin() + static_cast<long>(b));
      SliceTangle replaced{tangle.strands_in, {}};
      replaced.slices.assign(tangle.slices.begin(), tangle.slices.begin() + static_cast<long>(a));
      replaced.slices.push_back({Event::make_coupon(interpret_tangle(piece))});
      replaced.slices.insert(replaced.slices.end(), tangle.slices.begin() + static_cast<long>(b), tangle.slices.end());
      return fail_if(interpret_tangle(replaced) != interpret_tangle(tangle), "coupon changed the interpretation");
    });
  }
  return t.finish("sub-tangles replaced by their interpretation");
}

CheckResult json_round_trip(const Scale& s, std::uint64_t seed) {
  Rng rng(seed);
  Tally t("json round trip");
  for (std::size_t i = 0; i < s.property_trials / 4 + 1; ++i) {
    const auto [f, g] = random_composable_homs(rng);
    const tqft::System sys = random_system(rng, random_index(rng, 1, 3), false);
    const std::size_t n = random_index(rng, 1, 3);
    const SliceTangle tangle = braid_closure(random_braid(rng, n, 4), n);
    const TLMorphism m = random_tl(rng, 2, 2);
    t.run([&] {
      const io::Json text = io::Json::parse(io::to_json(g).dump());
      const AlgebraHom back = io::hom_from_json(text);
      if (back.matrix != g.matrix || !same_algebra(back.source, g.source)) return std::string("hom");
      if (io::bimodule_from_json(io::Json::parse(io::to_json(modulate(f)).dump())) != modulate(f))
        return std::string("bimodule");
      const tqft::System sb = io::system_from_json(io::Json::parse(io::to_json(sys).dump()));
      if (sb.step != sys.step || sb.states != sys.states || sb.costates != sys.costates ||
          sb.observables != sys.observables)
        return std::string("system");
      const SliceTangle tb = io::tangle_from_json(io::Json::parse(io::to_json(tangle).dump()));
      if (kauffman_bracket(tb) != kauffman_bracket(tangle) || tb.slices.size() != tangle.slices.size())
        return std::string("tangle");
      if (io::tl_morphism_from_json(io::Json::parse(io::to_json(m).dump())) != m) return std::string("tl morphism");
      const LaurentPoly p = kauffman_bracket(tangle);
      return fail_if(io::laurent_from_json(io::Json::parse(io::to_json(p).dump())) != p, "laurent");
    });
  }
  return t.finish("homs, bimodules, systems, tangles, morphisms and polynomials re-parse equal");
}

}  // namespace

Scale Scale::quick() {
  Scale s;
  s.systems = 24;
  s.singular_systems = 6;
  s.max_system_dim = 2;
  s.max_word_length = 5;
  s.hom_pairs = 20;
  s.conjugations = 6;
  s.include_m3 = false;
  s.composable_pairs = 12;
  s.max_space_dim = 2;
  s.tl_max_total = 8;
  s.tl_relations_n = 4;
  s.reidemeister_insertions = 60;
  s.max_braid_crossings = 4;
  s.max_braid_strands = 3;
  s.r1_moves = 8;
  s.random_corpus = 6;
  s.corpus_max_crossings = 6;
  s.annulus_max_identity = 4;
  s.annulus_pairs = 10;
  s.projectivity = 10;
  s.property_trials = 12;
  return s;
}

const std::vector<Check>& acceptance_criteria() {
  static const std::vector<Check> criteria{
      {1, "picture equivalence", picture_equivalence},
      {2, "unpointed iso matches conjugator existence", conjugator_agreement},
      {3, "modulation of conjugation is pointed by u", conjugation_modulation},
      {4, "modulation and End functoriality", functoriality},
      {5, "TL hom-space dimensions", tl_dimensions},
      {6, "TL relations and Yang-Baxter", tl_relations},
      {7, "Kauffman bracket invariance", kauffman_invariance},
      {8, "ribbon axioms", ribbon_axioms},
      {9, "annular closure", annulus},
      {10, "projectivity", projectivity},
  };
  return criteria;
}

const std::vector<Check>& invariant_checks() {
  static const std::vector<Check> checks{
      {0, "exact linear algebra", linalg_invariants},
      {0, "validation completeness", validation_complete},
      {0, "tensor product laws", tensor_laws},
      {0, "one-dimensional field theory laws", tqft_laws},
      {0, "TL bilinearity and interchange", tl_algebra_laws},
      {0, "locality", locality},
      {0, "json round trip", json_round_trip},
  };
  return checks;
}

const std::vector<CorpusEntry>& braid_corpus() {
  static const std::vector<CorpusEntry> corpus{
      {"unknot", {}, 1},
      {"two-component unlink", {}, 2},
      {"hopf link", {1, 1}, 2},
      {"right trefoil", {1, 1, 1}, 2},
      {"left trefoil", {-1, -1, -1}, 2},
      {"figure eight", {1, -2, 1, -2}, 3},
      {"cinquefoil", {1, 1, 1, 1, 1}, 2},
      {"three-twist", {1, 1, 1, 2, -1, 2}, 3},
      {"torus (2,8)", {1, 1, 1, 1, 1, 1, 1, 1}, 2},
      {"torus (3,4)", {1, 2, 1, 2, 1, 2, 1, 2}, 3},
      {"four-strand twist", {1, 2, 3, 1, 2, 3}, 4},
      {"four-strand mixed", {1, -2, 3, -2, 1}, 4},
  };
  return corpus;
}

}  // namespace skeinalg::checks
