// fsn: command-line front end.
//
// Exit codes: 0 decided, 1 domain failure, 2 input failure, 3 undetermined
// under --strict.

#include "fsn/counterexample.hpp"
#include "fsn/diagonal.hpp"
#include "fsn/homology.hpp"
#include "fsn/io.hpp"
#include "fsn/locus.hpp"
#include "fsn/seminorm.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace fsn;
using io::Json;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInput = 2;
constexpr int kUndetermined = 3;

struct Config {
  std::size_t depth = 8;
  std::size_t m_max = 64;
  std::string format = "text";
  bool strict = false;
  std::uint64_t seed = 1;
  bool depth_capped = false;
  std::size_t quotient_depth = 64;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_out(const Config& c) { return c.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::shared_ptr<const fincat::PresentedCategory> load_valid_category(const std::string& path,
                                                                    Json* issues = nullptr) {
  auto cat = std::make_shared<const fincat::PresentedCategory>(
      io::parse_category(io::read_json_file(path)));
  const auto report = fincat::validate(*cat);
  if (!report.ok()) {
    if (issues != nullptr) {
      *issues = io::to_json(report);
    }
    const auto& first = report.issues.front();
    throw DomainFailure(path + ": " + first.location + ": " + first.message);
  }
  return cat;
}

fincat::Limits limits_for(const Config& c) {
  fincat::Limits l;
  l.max_depth = std::max<std::size_t>(l.max_depth, c.depth);
  return l;
}

std::string describe(const seminorm::TruncatedValue& v) {
  if (v.upper_bound.is_infinite()) {
    return "infinity at depth " + std::to_string(v.depth) +
           (v.exact ? " (exact)" : " (no representation at this depth)");
  }
  return v.upper_bound.to_string() + (v.exact ? " (exact)" : " (upper bound, not exact)");
}

std::string describe_space(const exactq::Subspace& s, const std::string& object) {
  if (s.is_full()) {
    return "F(" + object + ")";
  }
  if (s.is_zero()) {
    return "0";
  }
  std::string out = "span{";
  bool first = true;
  for (const auto& b : s.basis_vectors()) {
    out += (first ? "" : ", ") + exactq::to_string(b);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Config& c, const std::string& path) {
  const auto cat = io::parse_category(io::read_json_file(path));
  const auto report = fincat::validate(cat);
  if (json_out(c)) {
    emit(io::to_json(report));
  } else if (report.ok()) {
    std::cout << "valid: " << cat.objects.size() << " objects, " << cat.generators.size()
              << " generators, " << cat.relations.size() << " relations\n";
  } else {
    for (const auto& i : report.issues) {
      std::cout << i.location << ": " << fincat::to_string(i.kind) << ": " << i.message << "\n";
    }
  }
  return report.ok() ? kOk : kDomain;
}

int cmd_eval(const Config& c, const std::string& cat_path, const std::string& fam_path,
             const std::string& elem_path) {
  const auto cat = load_valid_category(cat_path);
  const auto fam = io::parse_family(io::read_json_file(fam_path));
  const auto elem = io::parse_element(io::read_json_file(elem_path));
  fincat::MorphismCache cache(cat, limits_for(c));
  const auto ev = seminorm::eval_generated(cache, fam, elem, c.depth);
  if (json_out(c)) {
    Json j = io::to_json(ev);
    j["depth_capped"] = c.depth_capped;
    emit(j);
  } else {
    std::cout << describe(ev.value) << "\n";
    for (const auto& t : ev.witness) {
      std::cout << "  " << exactq::to_string(t.coefficient) << " * F(";
      if (t.word.empty()) {
        std::cout << "id";
      }
      for (std::size_t i = 0; i < t.word.size(); ++i) {
        std::cout << (i ? " " : "") << t.word[i];
      }
      std::cout << ")(entry " << t.entry << ")\n";
    }
  }
  return (c.strict && !ev.value.exact) ? kUndetermined : kOk;
}

int cmd_locus(const Config& c, const std::string& cat_path, const std::string& fam_path) {
  const auto cat = load_valid_category(cat_path);
  bool undetermined = false;
  if (fam_path.empty()) {
    const auto u = locus::universal_locus(*cat, std::max<std::size_t>(c.depth, 1),
                                          c.quotient_depth, limits_for(c));
    for (const auto& l : u.loci) {
      undetermined = undetermined || l.status != locus::LocusStatus::exact;
    }
    if (json_out(c)) {
      emit(io::to_json(u));
    } else {
      for (const auto& l : u.loci) {
        if (l.status == locus::LocusStatus::exact) {
          std::cout << "N(" << l.object << ") = " << describe_space(l.space, l.object) << ", exact\n";
        } else {
          std::cout << "N(" << l.object << ") contains " << describe_space(l.space, l.object)
                    << ", inner bound (undetermined)\n";
        }
      }
      for (const auto& cert : u.certificates) {
        std::cout << "  certificate at " << cert.object << ": eigenvalue "
                  << exactq::to_string(cert.eigenvalue) << ", eigenvector "
                  << exactq::to_string(cert.eigenvector) << "\n";
      }
    }
  } else {
    const auto fam = io::parse_family(io::read_json_file(fam_path));
    const auto h = seminorm::SeminormHandle::generated(cat, fam, limits_for(c));
    const auto bounds = locus::loci_of(h, c.depth);
    for (const auto& b : bounds) {
      undetermined = undetermined || !b.exact();
    }
    if (json_out(c)) {
      Json j = Json::array();
      for (const auto& b : bounds) {
        j.push_back(io::to_json(b));
      }
      emit({{"loci", j}});
    } else {
      for (const auto& b : bounds) {
        if (b.exact()) {
          std::cout << "N_sigma(" << b.object << ") = " << describe_space(b.inner, b.object) << ", exact\n";
        } else {
          std::cout << describe_space(b.inner, b.object) << " <= N_sigma(" << b.object
                    << ") <= " << describe_space(b.outer, b.object) << " (undetermined)\n";
        }
      }
    }
  }
  return (c.strict && undetermined) ? kUndetermined : kOk;
}

int cmd_carry(const Config& c, const std::string& cat_path, const std::string& sigma_path,
              const std::string& tau_path) {
  const auto cat = load_valid_category(cat_path);
  const auto fs = io::parse_family(io::read_json_file(sigma_path));
  const auto ft = io::parse_family(io::read_json_file(tau_path));
  auto cache = std::make_shared<const fincat::MorphismCache>(cat, limits_for(c));
  const auto sigma = seminorm::SeminormHandle::generated(cache, fs);
  bool same = fs.entries.size() == ft.entries.size();
  for (std::size_t i = 0; same && i < fs.entries.size(); ++i) {
    same = fs.entries[i].object == ft.entries[i].object &&
           fs.entries[i].vector == ft.entries[i].vector &&
           fs.entries[i].weight == ft.entries[i].weight;
  }
  const auto tau = same ? sigma : seminorm::SeminormHandle::generated(cache, ft);
  const auto v = locus::carries(sigma, tau, c.depth);
  if (json_out(c)) {
    emit(io::to_json(v));
  } else {
    switch (v.kind) {
      case locus::CarryVerdict::Kind::carries:
        std::cout << "carries" << (v.reason == "reflexive" ? " (reflexive)" : "") << "\n";
        break;
      case locus::CarryVerdict::Kind::violated:
        std::cout << "violated at " << v.object << ": witness " << exactq::to_string(v.witness)
                  << "\n";
        break;
      case locus::CarryVerdict::Kind::undetermined:
        std::cout << "undetermined at";
        for (const auto& o : v.undetermined_objects) {
          std::cout << " " << o;
        }
        std::cout << "\n";
        break;
    }
  }
  return (c.strict && v.kind == locus::CarryVerdict::Kind::undetermined) ? kUndetermined : kOk;
}

// Input: {"enumeration": [{"object", "vector"}...], "families": [[w...]...],
//         "samples": [{"object", "vector"}...]}.  Samples default to random
// small integer vectors drawn with --seed.
int cmd_diagonal(const Config& c, const std::string& cat_path, const std::string& in_path,
                 std::size_t samples_per_object) {
  const auto cat = load_valid_category(cat_path);
  const Json in = io::read_json_file(in_path);
  if (!in.is_object()) {
    throw InputError("diagonal input: expected a JSON object");
  }
  for (const auto& [key, value] : in.items()) {
    if (key != "enumeration" && key != "families" && key != "samples") {
      throw InputError("diagonal input: unknown key \"" + key + "\"");
    }
  }
  if (!in.contains("enumeration") || !in.contains("families") || !in["enumeration"].is_array() ||
      !in["families"].is_array()) {
    throw InputError("diagonal input: needs \"enumeration\" and \"families\" arrays");
  }
  diagonal::Enumeration en;
  for (const auto& e : in["enumeration"]) {
    en.entries.push_back(io::parse_element(e));
  }
  std::vector<diagonal::Weights> families;
  for (const auto& f : in["families"]) {
    if (!f.is_array()) {
      throw InputError("diagonal input: each family is an array of weights");
    }
    diagonal::Weights w;
    for (const auto& x : f) {
      if (!x.is_string()) {
        throw InputError("diagonal input: weights are rational strings");
      }
      w.push_back(exactq::parse_rational(x.get<std::string>()));
    }
    families.push_back(std::move(w));
  }
  std::vector<seminorm::Element> samples;
  if (in.contains("samples")) {
    if (!in["samples"].is_array()) {
      throw InputError("diagonal input: \"samples\" must be an array");
    }
    for (const auto& s : in["samples"]) {
      samples.push_back(io::parse_element(s));
    }
  } else {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const auto& o : cat->objects) {
      for (std::size_t i = 0; i < samples_per_object; ++i) {
        exactq::Vector v;
        for (std::size_t k = 0; k < o.dim; ++k) {
          v.push_back(exactq::Rational(coeff(rng)));
        }
        samples.push_back({o.name, v});
      }
    }
  }
  en.validate(*cat);
  const std::size_t n = en.size();
  for (const auto& f : families) {
    if (f.size() != n) {
      throw InputError("diagonal input: every family needs one weight per enumeration entry");
    }
    for (const auto& x : f) {
      if (x < 0) {
        throw DomainFailure("diagonal input: negative weight");
      }
    }
  }
  fincat::MorphismCache cache(cat, limits_for(c));
  const auto v = diagonal::diagonal_weights(en, families, n);
  bool all_hold = true;
  bool all_exact = true;
  Json reports = Json::array();
  std::ostringstream text;
  text << "v = " << exactq::to_string(v) << " (prefix length " << n << ")\n";
  for (std::size_t m = 0; m < families.size() && m < n; ++m) {
    const auto r = diagonal::verify_carry_bound(cache, en, v, families[m], m, samples, c.depth);
    all_exact = all_exact && r.exact;
    std::size_t held = 0;
    for (const auto& s : r.samples) {
      held += s.holds ? 1 : 0;
      all_hold = all_hold && s.holds;
    }
    reports.push_back(io::to_json(r));
    text << "m = " << m << ": Q = " << exactq::to_string(r.Q)
         << (r.exact ? " (exact)" : " (lower bound; values upper-bound-only)") << ", " << held
         << "/" << r.samples.size() << " samples satisfy |a|_v >= Q |a|_{v_m}\n";
  }
  if (json_out(c)) {
    emit({{"v", io::to_json(v)}, {"reports", reports}, {"all_hold", all_hold}});
  } else {
    std::cout << text.str();
  }
  if (!all_hold) {
    return kDomain;
  }
  return (c.strict && !all_exact) ? kUndetermined : kOk;
}

int cmd_counterexample(const Config& c, const std::string& v_path, const std::string& w_path) {
  counterexample::Sequence v = counterexample::Sequence::constant(1);
  if (!v_path.empty()) {
    v = io::parse_sequence(io::read_json_file(v_path));
  }
  try {
    counterexample::validate_weight(v);
  } catch (const std::invalid_argument& e) {
    throw DomainFailure(e.what());
  }
  const auto gap = counterexample::gap_demo(v, c.m_max);
  Json j = io::to_json(gap);
  std::ostringstream text;
  text << "w(m) = m*v(m) + 1; |1_w|_w = " << exactq::to_string(gap.lower_bound_w)
       << (gap.lower_bound_certified ? " >= 1/2 (certified)" : " (below 1/2!)") << "\n";
  text << "  m  upper bound on |1_w|_v  <= 1/m\n";
  for (const auto& row : gap.rows) {
    text << "  " << row.m << "  " << exactq::to_string(row.upper_bound) << "  "
         << (row.holds ? "yes" : "NO") << "\n";
  }
  bool exact = true;
  if (!w_path.empty()) {
    const auto w = io::parse_sequence(io::read_json_file(w_path));
    const auto cf = counterexample::closed_form_value(v, w, c.m_max);
    exact = cf.exact;
    j["closed_form"] = {{"m_max", c.m_max},
                        {"upper_bound", io::to_json(cf.upper_bound)},
                        {"argmin", cf.argmin},
                        {"infimum", io::to_json(cf.infimum)},
                        {"attained", cf.attained},
                        {"exact", cf.exact}};
    text << "|1_w|_v over m <= " << c.m_max << ": " << exactq::to_string(cf.upper_bound)
         << (cf.exact ? " (exact)" : " (upper bound)") << "; infimum "
         << exactq::to_string(cf.infimum) << (cf.attained ? "" : " (not attained)") << "\n";
  }
  if (json_out(c)) {
    emit(j);
  } else {
    std::cout << text.str();
  }
  if (!gap.lower_bound_certified || !gap.all_rows_hold) {
    return kDomain;
  }
  return (c.strict && !exact) ? kUndetermined : kOk;
}

int cmd_homology(const Config& c, const std::string& complex_path, const std::string& chain_path) {
  const auto k = io::parse_complex(io::read_json_file(complex_path));
  if (chain_path.empty()) {
    Json dims = Json::array();
    std::ostringstream text;
    for (long d = 0; d <= std::max(k.dimension(), 0L); ++d) {
      const auto hb = homology::homology_basis(k, static_cast<std::size_t>(d));
      Json reps = Json::array();
      for (const auto& z : hb.cycles.columns()) {
        reps.push_back(io::to_json(z));
      }
      dims.push_back({{"degree", d}, {"dim", hb.dim()}, {"cycles", reps}});
      text << "H_" << d << " has dimension " << hb.dim() << "\n";
    }
    if (json_out(c)) {
      emit({{"homology", dims}});
    } else {
      std::cout << text.str();
    }
    return kOk;
  }
  const auto cls = io::parse_chain(io::read_json_file(chain_path), k);
  try {
    homology::validate_class(k, cls);
  } catch (const std::invalid_argument& e) {
    throw DomainFailure(e.what());
  }
  const auto value = homology::l1_simplicial(k, cls);
  if (json_out(c)) {
    emit({{"degree", cls.degree},
          {"l1_simplicial", io::to_json(value)},
          {"note", "simplicial value; an upper bound for the singular l1-semi-norm"}});
  } else {
    std::cout << "simplicial l1 value " << exactq::to_string(value)
              << " (upper bound for the singular semi-norm)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with functorial semi-norms"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  long long depth_opt = 8;
  app.add_option("--depth", depth_opt, "truncation depth for words")->capture_default_str();
  app.add_option("--m-max", cfg.m_max, "largest m for sequence computations")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--strict", cfg.strict, "exit 3 on undetermined results");
  app.add_option("--seed", cfg.seed, "seed for generated samples")->capture_default_str();

  std::string a, b, c2;
  std::size_t samples = 5;

  auto* v = app.add_subcommand("validate", "check a category file");
  v->add_option("category", a)->required();

  auto* e = app.add_subcommand("eval", "evaluate a generated semi-norm");
  e->add_option("category", a)->required();
  e->add_option("family", b)->required();
  e->add_option("element", c2)->required();

  auto* l = app.add_subcommand("locus", "universal locus, or loci of a generated semi-norm");
  l->add_option("category", a)->required();
  l->add_option("--family", b, "generating family file");
  l->add_option("--quotient-depth", cfg.quotient_depth, "quotient stabilization budget")
      ->capture_default_str();

  auto* ca = app.add_subcommand("carry", "does the first generated semi-norm carry the second");
  ca->add_option("category", a)->required();
  ca->add_option("sigma", b)->required();
  ca->add_option("tau", c2)->required();

  auto* dg = app.add_subcommand("diagonal", "diagonal weights and the carry estimate");
  dg->add_option("category", a)->required();
  dg->add_option("input", b)->required();
  dg->add_option("--samples", samples, "random samples per object")->capture_default_str();

  auto* ce = app.add_subcommand("counterexample", "gap report for a candidate weight v");
  ce->add_option("--v", b, "weight sequence file (default v = 1)");
  ce->add_option("--w", c2, "object sequence file for a closed-form value");

  auto* h = app.add_subcommand("homology", "homology dimensions or the simplicial l1 value");
  h->add_option("complex", a)->required();
  h->add_option("chain", b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kInput;
  }

  try {
    if (depth_opt < 0) {
      throw InputError("--depth must be nonnegative");
    }
    cfg.depth = static_cast<std::size_t>(depth_opt);
    if (const char* cap = std::getenv("SEMINORM_MAX_DEPTH")) {
      std::size_t pos = 0;
      unsigned long long value = 0;
      try {
        value = std::stoull(cap, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || cap[pos] != '\0') {
        throw InputError("SEMINORM_MAX_DEPTH must be a nonnegative integer");
      }
      if (cfg.depth > value) {
        cfg.depth = value;
        cfg.depth_capped = true;
        std::cerr << "note: depth capped at " << value << " by SEMINORM_MAX_DEPTH\n";
      }
    }

    if (v->parsed()) return cmd_validate(cfg, a);
    if (e->parsed()) return cmd_eval(cfg, a, b, c2);
    if (l->parsed()) return cmd_locus(cfg, a, b);
    if (ca->parsed()) return cmd_carry(cfg, a, b, c2);
    if (dg->parsed()) return cmd_diagonal(cfg, a, b, samples);
    if (ce->parsed()) return cmd_counterexample(cfg, b, c2);
    if (h->parsed()) return cmd_homology(cfg, a, b);
  } catch (const InputError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kInput;
  } catch (const DomainFailure& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kDomain;
  } catch (const fincat::ResourceLimit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kDomain;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kDomain;
  }
  return kOk;
}
