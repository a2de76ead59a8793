#include "skeinalg/skein/ribbon.hpp"

#include <sstream>

#include "skeinalg/errors.hpp"

namespace skeinalg::skein {

namespace {

Event ev(EventKind k) { return Event::of(k); }

SliceTangle cross_at(std::size_t n, std::size_t at, int sign) {
  return SliceTangle{n, {padded(ev(sign > 0 ? EventKind::cross_pos : EventKind::cross_neg), at, n)}};
}

TLMorphism product(const std::vector<TLMorphism>& bottom_to_top) {
  TLMorphism out = TLMorphism::identity(bottom_to_top.front().n_bottom());
  for (const auto& m : bottom_to_top) out = tl_compose(out, m);
  return out;
}

}  // namespace

bool IdentityReport::ok() const {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  return true;
}

std::vector<IdentityCheck> IdentityReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks)
    if (!c.holds()) out.push_back(c);
  return out;
}

std::string IdentityReport::describe_failures() const {
  std::ostringstream out;
  for (const auto& c : failures()) {
    out << c.name << " fails\n  lhs: " << to_string(c.lhs) << "\n  rhs: " << to_string(c.rhs) << "\n";
  }
  return out.str();
}

SliceTangle right_kink() {
  return SliceTangle{1,
                     {{ev(EventKind::id), ev(EventKind::cup)},
                      {ev(EventKind::cross_pos), ev(EventKind::id)},
                      {ev(EventKind::id), ev(EventKind::cap)}}};
}

SliceTangle left_kink() {
  return SliceTangle{1,
                     {{ev(EventKind::cup), ev(EventKind::id)},
                      {ev(EventKind::id), ev(EventKind::cross_pos)},
                      {ev(EventKind::cap), ev(EventKind::id)}}};
}

SliceTangle cabled_right_kink() {
  SliceTangle t{2, {}};
  t.slices.push_back({ev(EventKind::id), ev(EventKind::id), ev(EventKind::cup)});
  t.slices.push_back(padded(ev(EventKind::cup), 3, 4));
  // doubled strand passes over the doubled arc: a 2x2 grid of crossings
  t.slices.push_back(padded(ev(EventKind::cross_pos), 1, 6));
  t.slices.push_back({ev(EventKind::cross_pos), ev(EventKind::cross_pos), ev(EventKind::id), ev(EventKind::id)});
  t.slices.push_back(padded(ev(EventKind::cross_pos), 1, 6));
  t.slices.push_back(padded(ev(EventKind::cap), 3, 6));
  t.slices.push_back(padded(ev(EventKind::cap), 2, 4));
  return t;
}

IdentityReport ribbon_axiom_checks(std::size_t n_max, std::size_t bound) {
  if (n_max > bound) {
    throw ContractViolation("ribbon_axiom_checks: n_max " + std::to_string(n_max) + " exceeds bound " +
                            std::to_string(bound));
  }
  if (n_max < 2) throw ContractViolation("ribbon_axiom_checks: n_max must be at least 2");
  IdentityReport report;

  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::size_t i = 0; i + 2 < n; ++i) {
      const TLMorphism a = interpret_tangle(cross_at(n, i, 1));
      const TLMorphism b = interpret_tangle(cross_at(n, i + 1, 1));
      report.checks.push_back({"yang-baxter n=" + std::to_string(n) + " i=" + std::to_string(i), product({a, b, a}),
                               product({b, a, b})});
    }
  }

  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const TLMorphism pos = interpret_tangle(cross_at(n, i, 1));
      const TLMorphism neg = interpret_tangle(cross_at(n, i, -1));
      const std::string where = " n=" + std::to_string(n) + " i=" + std::to_string(i);
      report.checks.push_back({"reidemeister-2 (+-)" + where, tl_compose(pos, neg), TLMorphism::identity(n)});
      report.checks.push_back({"reidemeister-2 (-+)" + where, tl_compose(neg, pos), TLMorphism::identity(n)});
    }
  }

  const TLMorphism beta = crossing_resolution(1);
  const TLMorphism twist_pair = interpret_tangle(SliceTangle{2, {{ev(EventKind::twist_pos), ev(EventKind::twist_pos)}}});
  report.checks.push_back(
      {"full-twist naturality", interpret_tangle(cabled_right_kink()), product({twist_pair, beta, beta})});

  const TLMorphism double_twist =
      interpret_tangle(SliceTangle{1, {{ev(EventKind::twist_pos)}, {ev(EventKind::twist_pos)}}});
  report.checks.push_back({"quadratic twist equation", double_twist, interpret_tangle(right_kink().then(left_kink()))});
  report.checks.push_back({"kink is the twist", interpret_tangle(right_kink()),
                           interpret_tangle(SliceTangle{1, {{ev(EventKind::twist_pos)}}})});
  return report;
}

IdentityReport tl_relation_checks(std::size_t n_max) {
  IdentityReport report;
  const LaurentPoly delta = loop_value();
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const TLMorphism ei = TLMorphism::generator(n, i);
      const std::string at = tag + " i=" + std::to_string(i);
      report.checks.push_back({"e_i^2 = delta e_i" + at, tl_compose(ei, ei), ei * delta});
      if (i + 2 < n) {
        const TLMorphism ej = TLMorphism::generator(n, i + 1);
        report.checks.push_back({"e_i e_i+1 e_i = e_i" + at, product({ei, ej, ei}), ei});
        report.checks.push_back({"e_i+1 e_i e_i+1 = e_i+1" + at, product({ej, ei, ej}), ej});
      }
      for (std::size_t j = i + 2; j + 1 < n; ++j) {
        const TLMorphism ej = TLMorphism::generator(n, j);
        report.checks.push_back(
            {"far commutation" + at + " j=" + std::to_string(j), tl_compose(ei, ej), tl_compose(ej, ei)});
      }
    }
  }
  return report;
}

}  // namespace skeinalg::skein
