#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "skeinalg/checks/criteria.hpp"
#include "skeinalg/errors.hpp"
#include "skeinalg/io/json_io.hpp"
#include "skeinalg/skein/state_sum.hpp"

namespace fs = std::filesystem;
using namespace skeinalg;
using io::Json;

namespace {

enum ExitCode { kOk = 0, kParse = 1, kShape = 2, kValidation = 3, kLabel = 4, kInternal = 5 };

struct Options {
  std::uint64_t seed = 0x5eed5eedULL;
  bool emit_json = false;
};

InvertibleSearchOptions search_options(const Options& o) {
  InvertibleSearchOptions s;
  s.seed = o.seed;
  return s;
}

std::string matrix_text(const QMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << to_string(m(r, c));
    out << "]\n";
  }
  return out.str();
}

std::string vector_text(const QVec& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << to_string(v[i]);
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------- bracket

struct BracketArgs {
  std::string input;
  std::string braid;
  std::size_t strands = 0;
  std::string variable = "A";
  std::string method = "compositional";
  bool normalize = false;
};

int run_bracket(const BracketArgs& a, const Options& o) {
  skein::SliceTangle tangle;
  if (!a.braid.empty() || (!a.input.empty() && !fs::exists(a.input))) {
    const skein::BraidWord word = skein::parse_braid(a.braid.empty() ? a.input : a.braid);
    const std::size_t n = a.strands ? a.strands : skein::braid_strands(word);
    tangle = skein::braid_closure(word, n);
  } else if (!a.input.empty()) {
    tangle = io::tangle_from_json(io::read_json_file(a.input));
  } else {
    throw ParseError("bracket needs a tangle file or a braid string");
  }
  LaurentPoly value;
  if (a.method == "compositional") {
    value = skein::kauffman_bracket(tangle);
  } else if (a.method == "state-sum") {
    value = skein::bracket_state_sum_parallel(tangle);
  } else {
    throw ParseError("unknown method '" + a.method + "'");
  }
  if (a.normalize) value = skein::normalize_writhe(value, tangle.oriented_writhe());
  if (o.emit_json) {
    Json out;
    out["tangle"] = io::to_json(tangle);
    out["writhe"] = tangle.oriented_writhe();
    out["normalized"] = a.normalize;
    out["bracket"] = io::to_json(value);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(value, a.variable) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- tl

struct TlArgs {
  std::string action;
  std::vector<std::string> inputs;
  std::string variable = "A";
  bool annulus = false;
};

std::size_t parse_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a strand count, got '" + s + "'");
  }
  if (used != s.size() || v > 32) throw ParseError("expected a strand count up to 32, got '" + s + "'");
  return v;
}

int run_tl(const TlArgs& a, const Options& o) {
  if (a.action == "basis") {
    if (a.inputs.size() != 2) throw ParseError("tl basis takes n_bottom and n_top");
    const auto basis = skein::tl_basis(parse_count(a.inputs[0]), parse_count(a.inputs[1]));
    if (o.emit_json) {
      Json out = Json::array();
      for (const auto& d : basis) out.push_back(d.partners());
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "dim " << basis.size() << "\n";
      for (const auto& d : basis) std::cout << "  " << skein::to_string(d) << "\n";
    }
    return kOk;
  }
  if (a.inputs.size() != 1) throw ParseError("tl " + a.action + " takes one tangle file");
  const skein::SliceTangle tangle = io::tangle_from_json(io::read_json_file(a.inputs[0]));
  const skein::TLMorphism m = skein::interpret_tangle(tangle);
  if (a.action == "interpret") {
    if (o.emit_json) {
      std::cout << io::to_json(m).dump(2) << "\n";
    } else {
      std::cout << "TL(" << m.n_bottom() << "," << m.n_top() << "): " << skein::to_string(m, a.variable) << "\n";
    }
    return kOk;
  }
  if (a.action == "closure") {
    if (m.n_bottom() != m.n_top()) {
      throw ShapeError("closure needs equal strand counts, got " + std::to_string(m.n_bottom()) + " in and " +
                       std::to_string(m.n_top()) + " out");
    }
    if (a.annulus) {
      const auto c = skein::annulus_closure_eval(m);
      std::cout << (o.emit_json ? io::to_json(c).dump(2) : skein::to_string(c, a.variable)) << "\n";
    } else {
      const LaurentPoly p = skein::plane_closure(m);
      std::cout << (o.emit_json ? io::to_json(p).dump(2) : to_string(p, a.variable)) << "\n";
    }
    return kOk;
  }
  throw ParseError("unknown tl action '" + a.action + "'");
}

// ---------------------------------------------------------------- algebra

struct AlgebraArgs {
  std::string action;
  std::vector<std::string> inputs;
};

enum class ObjectKind { algebra, hom, bimodule };

ObjectKind kind_of(const Json& j) {
  if (j.is_string()) return ObjectKind::algebra;
  if (!j.is_object()) throw ParseError("expected a JSON object or a builtin algebra name");
  if (j.contains("left_action") || j.contains("point")) return ObjectKind::bimodule;
  if (j.contains("matrix")) return ObjectKind::hom;
  if (j.contains("mult")) return ObjectKind::algebra;
  throw ParseError("cannot tell whether the input is an algebra, a homomorphism or a bimodule");
}

Json load(const std::string& input) {
  if (fs::exists(input)) return io::read_json_file(input);
  return Json(input);  // builtin algebra name
}

fs::path base_of(const std::string& input) { return fs::exists(input) ? fs::path(input).parent_path() : fs::path(); }

/// Bimodule inputs are used as given; homomorphisms are modulated first.
PointedBimodule load_bimodule(const std::string& input) {
  const Json j = load(input);
  switch (kind_of(j)) {
    case ObjectKind::bimodule:
      return io::bimodule_from_json(j, base_of(input));
    case ObjectKind::hom:
      return modulate(io::hom_from_json(j, base_of(input)));
    case ObjectKind::algebra:
      return regular_bimodule(io::algebra_from_json(j, base_of(input)));
  }
  throw std::logic_error("unreachable object kind");
}

void print_bimodule(const std::string& what, const PointedBimodule& m, const Options& o) {
  if (o.emit_json) {
    std::cout << io::to_json(m).dump(2) << "\n";
    return;
  }
  std::cout << what << ": dim " << m.dim() << " over " << m.left_algebra()->dim() << "-dim left and "
            << m.right_algebra()->dim() << "-dim right algebras, point " << vector_text(m.pointing()) << "\n";
}

int run_algebra(const AlgebraArgs& a, const Options& o) {
  auto need = [&](std::size_t n) {
    if (a.inputs.size() != n) {
      throw ParseError("algebra " + a.action + " takes " + std::to_string(n) + " input(s), got " +
                       std::to_string(a.inputs.size()));
    }
  };
  if (a.action == "validate") {
    if (a.inputs.empty()) throw ParseError("algebra validate needs at least one input");
    for (const auto& input : a.inputs) {
      const Json j = load(input);
      std::size_t dim = 0;
      switch (kind_of(j)) {
        case ObjectKind::algebra:
          dim = io::algebra_from_json(j, base_of(input))->dim();
          break;
        case ObjectKind::hom:
          dim = io::hom_from_json(j, base_of(input)).source->dim();
          break;
        case ObjectKind::bimodule:
          dim = io::bimodule_from_json(j, base_of(input)).dim();
          break;
      }
      std::cout << input << ": OK, dim " << dim << "\n";
    }
    return kOk;
  }
  if (a.action == "modulate") {
    need(1);
    const Json j = load(a.inputs[0]);
    if (kind_of(j) != ObjectKind::hom) throw ParseError("modulate needs a homomorphism");
    print_bimodule("modulation", modulate(io::hom_from_json(j, base_of(a.inputs[0]))), o);
    return kOk;
  }
  if (a.action == "tensor") {
    need(2);
    print_bimodule("tensor product", tensor_over(load_bimodule(a.inputs[0]), load_bimodule(a.inputs[1])), o);
    return kOk;
  }
  if (a.action == "iso" || a.action == "iso-unpointed") {
    need(2);
    const PointedBimodule m = load_bimodule(a.inputs[0]);
    const PointedBimodule n = load_bimodule(a.inputs[1]);
    const auto w = a.action == "iso" ? bimodule_iso_pointed(m, n, search_options(o))
                                     : bimodule_iso_unpointed(m, n, search_options(o));
    if (o.emit_json) {
      Json out;
      out["present"] = w.has_value();
      if (w) out["witness"] = io::to_json(*w);
      std::cout << out.dump(2) << "\n";
    } else if (w) {
      std::cout << "present\nwitness:\n" << matrix_text(*w);
    } else {
      std::cout << "absent\n";
    }
    return kOk;
  }
  throw ParseError("unknown algebra action '" + a.action + "'");
}

// ---------------------------------------------------------------- tqft1d

struct TqftArgs {
  std::string system;
  std::string word;
  std::string picture = "both";
};

int run_tqft(const TqftArgs& a, const Options& o) {
  const tqft::System sys = io::system_from_json(io::read_json_file(a.system));
  const tqft::SpacetimeWord word = tqft::parse_word(a.word);
  const bool schrodinger = a.picture != "heisenberg";
  const bool heisenberg = a.picture != "schrodinger";
  Json out;
  if (word.closed() && schrodinger && heisenberg) {
    const auto cmp = tqft::compare_pictures(sys, word);
    if (o.emit_json) {
      out["schrodinger"] = io::to_json(cmp.schrodinger);
      out["heisenberg"] = io::to_json(cmp.heisenberg);
      out["agree"] = cmp.agree;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "schrodinger: " << to_string(cmp.schrodinger) << "\nheisenberg: " << to_string(cmp.heisenberg)
                << "\n" << (cmp.agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return cmp.agree ? kOk : kInternal;
  }
  if (schrodinger) {
    const QMatrix m = tqft::eval_schrodinger(sys, word);
    if (o.emit_json) {
      out["schrodinger"] = io::to_json(m);
    } else if (word.closed()) {
      std::cout << "schrodinger: " << to_string(m(0, 0)) << "\n";
    } else {
      std::cout << "schrodinger: " << m.rows() << "x" << m.cols() << "\n" << matrix_text(m);
    }
  }
  if (heisenberg) {
    const PointedBimodule h = tqft::eval_heisenberg(sys, word);
    if (o.emit_json) {
      out["heisenberg"] = io::to_json(h);
    } else if (word.closed()) {
      std::cout << "heisenberg: " << to_string(h.pointing()[0]) << "\n";
    } else {
      std::cout << "heisenberg: dim " << h.dim() << ", point " << vector_text(h.pointing()) << "\n";
    }
  }
  if (o.emit_json) std::cout << out.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- selftest

int run_selftest(const std::string& level, const Options& o) {
  const checks::Scale scale = level == "full" ? checks::Scale{} : checks::Scale::quick();
  std::vector<const checks::Check*> all;
  for (const auto& c : checks::invariant_checks()) all.push_back(&c);
  for (const auto& c : checks::acceptance_criteria()) all.push_back(&c);
  std::size_t failed = 0;
  std::size_t index = 0;
  for (const auto* check : all) {
    const auto r = check->run(scale, o.seed + index++);
    std::cout << (r.passed ? "PASS " : "FAIL ") << check->name << " (" << r.instances << " instances";
    if (!r.passed) std::cout << ", " << r.failures << " failed: " << r.detail;
    std::cout << ")\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << "\n";
  return failed ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skein and algebra computations"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--seed", opts.seed, "Seed for randomized searches (SKEINALG_SEED overrides)");
  app.add_flag("--emit-json", opts.emit_json, "Print results as JSON");

  BracketArgs bracket;
  auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a closed tangle or braid closure");
  cmd_bracket->add_option("input", bracket.input, "Tangle JSON file, or a braid word such as \"s1 s2^-1\"");
  cmd_bracket->add_option("--braid", bracket.braid, "Braid word whose closure is evaluated");
  cmd_bracket->add_option("--strands", bracket.strands, "Strand count for the braid (default: smallest that fits)");
  cmd_bracket->add_option("--variable", bracket.variable, "Name printed for the skein variable");
  cmd_bracket->add_option("--method", bracket.method, "compositional or state-sum")
      ->check(CLI::IsMember({"compositional", "state-sum"}));
  cmd_bracket->add_flag("--normalize-writhe", bracket.normalize, "Multiply by (-A^3)^(-writhe)");

  TlArgs tl;
  auto* cmd_tl = app.add_subcommand("tl", "Temperley-Lieb diagrams and tangle interpretation");
  cmd_tl->add_option("action", tl.action, "basis, interpret or closure")
      ->required()
      ->check(CLI::IsMember({"basis", "interpret", "closure"}));
  cmd_tl->add_option("inputs", tl.inputs, "n_bottom n_top for basis, otherwise a tangle file");
  cmd_tl->add_option("--variable", tl.variable, "Name printed for the skein variable");
  cmd_tl->add_flag("--annulus", tl.annulus, "Close around an annulus instead of the plane");

  AlgebraArgs algebra;
  auto* cmd_algebra = app.add_subcommand("algebra", "Algebras, homomorphisms and pointed bimodules");
  cmd_algebra->add_option("action", algebra.action, "validate, modulate, tensor, iso or iso-unpointed")
      ->required()
      ->check(CLI::IsMember({"validate", "modulate", "tensor", "iso", "iso-unpointed"}));
  cmd_algebra->add_option("inputs", algebra.inputs, "JSON files or builtin algebra names");

  TqftArgs tq;
  auto* cmd_tqft = app.add_subcommand("tqft1d", "Evaluate a spacetime word in both pictures");
  cmd_tqft->add_option("system", tq.system, "System JSON file")->required();
  cmd_tqft->add_option("word", tq.word, "Word such as \"w[0].u(1).v[0]\"")->required();
  cmd_tqft->add_option("--picture", tq.picture, "schrodinger, heisenberg or both")
      ->check(CLI::IsMember({"schrodinger", "heisenberg", "both"}));

  std::string level = "quick";
  auto* cmd_selftest = app.add_subcommand("selftest", "Run the invariant suites");
  cmd_selftest->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (const char* env = std::getenv("SKEINALG_SEED")) {
      try {
        opts.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw ParseError(std::string("SKEINALG_SEED is not an integer: '") + env + "'");
      }
    }
    if (*cmd_bracket) return run_bracket(bracket, opts);
    if (*cmd_tl) return run_tl(tl, opts);
    if (*cmd_algebra) return run_algebra(algebra, opts);
    if (*cmd_tqft) return run_tqft(tq, opts);
    if (*cmd_selftest) return run_selftest(level, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShape;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const LabelError& e) {
    std::cerr << "label error: " << e.what() << "\n";
    return kLabel;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
