#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "gmalg/gmalg.hpp"

namespace {

using namespace gmalg;

enum Exit { kPass = 0, kFinding = 1, kViolation = 2, kInput = 3 };

struct Output {
  std::string json_path;
  std::string md_path;
  bool markdown = false;
};

// Failing lines under these prefixes contradict a proven statement.
bool guaranteed(const std::string& id) {
  for (const char* p : {"structure.", "steps.", "theorem.", "oracle.", "certificate."})
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

int exit_code(const Report& rep) {
  int code = kPass;
  for (const auto& l : rep.lines())
    if (!l.pass) code = std::max(code, guaranteed(l.id) ? int(kViolation) : int(kFinding));
  return code;
}

int emit(const Report& rep, const Output& out) {
  const auto json = rep.json();
  const auto md = rep.markdown();
  if (!out.json_path.empty()) write_text_file(out.json_path, json);
  if (!out.md_path.empty()) write_text_file(out.md_path, md);
  std::cout << (out.markdown ? md : json);
  return exit_code(rep);
}

template <class Fn>
int with_ring(const RingSpec& spec, Fn&& fn) {
  if (spec.kind == RingKind::Zmod) return fn(Ring<Zn>(spec));
  return fn(Ring<Rational>(spec));
}

Json load(const std::string& path, const char* schema) {
  auto doc = read_json_file(path);
  expect_schema(doc, schema);
  return doc;
}

RingSpec parse_ring(const std::string& text) {
  if (text == "q" || text == "Q") return RingSpec::rationals();
  if (text.rfind("zmod:", 0) == 0) {
    try {
      return RingSpec::zmod(std::stoll(text.substr(5)));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::BadInput, "ring must be zmod:N or q, got \"" + text + "\"");
}

template <class S>
std::string show(const Ring<S>& r, const Vector<S>& v) {
  return to_string(r, v);
}

template <class S>
std::string show_map(const GMAlgebra<S>& g, const LinMap<S>& m) {
  std::string out;
  for (Eigen::Index j = 0; j < g.dim(); ++j)
    out += (j ? "; " : "") + g.algebra().labels()[j] + " -> " + to_string(g.ring(), Vector<S>(m.col(j)));
  return out;
}

// ---------------------------------------------------------------- validate

struct AxiomText {
  const char* id;
  const char* text;
};

constexpr AxiomText kAxioms[] = {
    {"nonzero_bimodule", "M != 0 or N != 0"},
    {"M.left_unital", "1m = m"},
    {"M.right_unital", "m1 = m"},
    {"M.left_assoc", "(aa')m = a(a'm)"},
    {"M.right_assoc", "m(bb') = (mb)b'"},
    {"M.bimodule", "(am)b = a(mb)"},
    {"N.left_unital", "1n = n"},
    {"N.right_unital", "n1 = n"},
    {"N.left_assoc", "(bb')n = b(b'n)"},
    {"N.right_assoc", "n(aa') = (na)a'"},
    {"N.bimodule", "(bn)a = b(na)"},
    {"phi.left_linear", "Phi(am, n) = a Phi(m, n)"},
    {"phi.right_linear", "Phi(m, na) = Phi(m, n)a"},
    {"phi.balanced", "Phi(mb, n) = Phi(m, bn)"},
    {"psi.left_linear", "Psi(bn, m) = b Psi(n, m)"},
    {"psi.right_linear", "Psi(n, mb) = Psi(n, m)b"},
    {"psi.balanced", "Psi(na, m) = Psi(n, am)"},
    {"diagram.mnm", "Phi(m, n)m' = m Psi(n, m')"},
    {"diagram.nmn", "Psi(n, m)n' = n Phi(m, n')"},
};

template <class S>
void context_facts(Report& rep, const MoritaContext<S>& ctx) {
  rep.fact("ring", ctx.ring().spec().str());
  std::ostringstream dims;
  dims << ctx.dim(Block::A) << "," << ctx.dim(Block::M) << "," << ctx.dim(Block::N) << "," << ctx.dim(Block::B);
  rep.fact("dims A,M,N,B", dims.str());
}

int run_validate(const std::string& path, const Output& out) {
  const auto doc = load(path, kContextSchema);
  return with_ring(document_ring(doc), [&](const auto& r) {
    const auto ctx = context_from_json(r, doc);
    const auto v = validate_context(ctx);
    Report rep("context validation");
    context_facts(rep, ctx);
    const auto f = check_faithful(ctx);
    rep.fact("M faithful (left, right)", std::string(f.left_faithful ? "yes" : "no") + ", " +
                                             (f.right_faithful ? "yes" : "no"));
    rep.fact("N faithful (left, right)", std::string(f.n_left_faithful ? "yes" : "no") + ", " +
                                             (f.n_right_faithful ? "yes" : "no"));
    for (const auto& ax : kAxioms) {
      std::string witness;
      for (const auto& x : v.violations)
        if (x.axiom == ax.id) witness = x.witness;
      rep.check(ax.id, ax.text, witness.empty(), witness);
    }
    return emit(rep, out);
  });
}

// ------------------------------------------------------------------- build

int run_build(const std::string& path, const std::string& emit_path) {
  const auto doc = load(path, kContextSchema);
  return with_ring(document_ring(doc), [&](const auto& r) {
    const auto g = build_gma(context_from_json(r, doc));
    write_text_file(emit_path, algebra_to_json(g.algebra()).dump(2) + "\n");
    return int(kPass);
  });
}

// ---------------------------------------------------------------- classify

struct ClassifyOptions {
  std::string context, map;
  int k = 1;
  bool oracle = false;
  std::string mode = "all";
};

bool guard_kind(ErrorKind k) {
  return k == ErrorKind::TwoTorsion || k == ErrorKind::NotFaithful || k == ErrorKind::NotEnumerable;
}

template <class S>
void theorem_section(Report& rep, const GMAlgebra<S>& g, const LinMap<S>& theta, int k, bool commuting,
                     bool strict) {
  std::optional<HypothesisWitness<S>> hyp;
  try {
    hyp = check_thm_2_5_hypotheses(g, k);
  } catch (const Error& e) {
    if (strict || !guard_kind(e.kind())) throw;
    rep.fact("theorem pipeline", std::string("skipped: ") + e.what());
    return;
  }
  const auto& r = g.ring();
  rep.fact("hypotheses (cond1, cond2, cond3)", std::string(hyp->cond1 ? "true" : "false") + ", " +
                                                   (hyp->cond2 ? "true" : "false") + ", " +
                                                   (hyp->cond3 ? "true" : "false"));
  if (hyp->m0) rep.fact("witness m0", show(r, *hyp->m0));
  if (hyp->n0) rep.fact("witness n0", show(r, *hyp->n0));
  if (!hyp->all()) {
    rep.fact("theorem pipeline", "hypotheses not met; no conclusion drawn");
    return;
  }
  if (!commuting) return;
  try {
    const auto pf = construct_proper_form(g, theta, k);
    rep.fact("C", show(r, pf.c));
    rep.check("theorem.proper_form", "Theta(X) = XC + Omega(X), C central, Omega central-valued", true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TheoremViolation) throw;
    rep.check("theorem.proper_form", "Theta(X) = XC + Omega(X), C central, Omega central-valued", false, e.what());
  }
  rep.append(verify_step_invariants(g, theta, k), "steps.");
}

template <class S>
int classify(const Ring<S>& r, const Json& ctxdoc, const Json& mapdoc, const ClassifyOptions& o, const Output& out) {
  const auto g = build_gma(context_from_json(r, ctxdoc));
  const auto theta = map_from_json(r, mapdoc, g.dim());
  const bool all = o.mode == "all";
  Report rep("classification of a linear map");
  context_facts(rep, g.context());
  rep.fact("k", std::to_string(o.k));
  rep.fact("mode", o.mode);

  const auto kc = is_k_commuting(g, theta, o.k);
  rep.check("k_commuting", "[Theta(x), x]_k = 0 for all x", kc.holds,
            kc.counterexample ? "x = " + show(r, *kc.counterexample) : std::string{});
  if (o.oracle) {
    if constexpr (std::is_same_v<S, Zn>) {
      const auto brute = oracle::brute_k_commuting(g.algebra(), theta, o.k);
      const bool agree = brute.has_value() == !kc.holds &&
                         (!brute || oracle::to_elem(*kc.counterexample) == *brute);
      rep.check("oracle.k_commuting", "exhaustive scan gives the same verdict and witness", agree);
    } else {
      rep.fact("oracle", "unavailable over Q");
    }
  }

  if ((all || o.mode == "prop22") && kc.holds) rep.append(verify_prop_2_2(g, theta, o.k), "structure.");

  if (all || o.mode == "cert") {
    const auto cert = properness_certificate(g, theta);
    rep.check("proper", "Theta(x) = x lambda + zeta(x), lambda central, zeta central-valued", cert.has_value(),
              "no central lambda leaves a central-valued residual");
    if (cert) {
      rep.fact("lambda", show(r, cert->lambda));
      rep.fact("lambda free dimension", std::to_string(cert->free_dim));
      rep.check("certificate.exact", "x lambda + zeta(x) reproduces Theta",
                certificate_holds(g.algebra(), theta, *cert), show_map(g, cert->zeta));
    }
    if (o.oracle) {
      if constexpr (std::is_same_v<S, Zn>) {
        const bool brute = oracle::brute_properness(g.algebra(), theta).has_value();
        rep.check("oracle.properness", "exhaustive search over central lambda agrees", brute == cert.has_value());
      }
    }
  }

  if (all || o.mode == "thm25") theorem_section(rep, g, theta, o.k, kc.holds, o.mode == "thm25");
  return emit(rep, out);
}

int run_classify(const ClassifyOptions& o, const Output& out) {
  const auto ctxdoc = load(o.context, kContextSchema);
  const auto mapdoc = load(o.map, kMapSchema);
  return with_ring(document_ring(ctxdoc), [&](const auto& r) { return classify(r, ctxdoc, mapdoc, o, out); });
}

// ------------------------------------------------------------------- sweep

struct SweepOptions {
  std::string context;
  int k = 1;
  std::string mode = "prop22";
  std::uint64_t seed = 0;
  std::size_t budget = 200;
};

struct MapVerdict {
  bool pass = true;
  std::string witness;
};

MapVerdict from_report(const Report& rep) {
  if (const auto* f = rep.first_failure()) return {false, f->id + ": " + f->witness};
  return {};
}

template <class S>
int sweep(const Ring<S>& r, const Json& ctxdoc, const SweepOptions& o, const Output& out) {
  const auto g = build_gma(context_from_json(r, ctxdoc));
  const auto d = g.dim();
  Report rep("sweep: " + o.mode);
  context_facts(rep, g.context());
  rep.fact("k", std::to_string(o.k));
  rep.fact("seed", std::to_string(o.seed));
  rep.fact("random combinations", std::to_string(o.budget));

  if (o.mode == "prop24") {
    detail::guard_theorem_inputs(g);
    const auto joint = commuting_derivations(g, o.k);
    rep.check("theorem.joint_zero", "every k-commuting derivation is zero", joint.is_zero_module(),
              joint.is_zero_module() ? std::string{} : show_map(g, unvec(joint.generators().front(), d)));
    const auto space = derivation_space(g);
    rep.fact("derivation space rank", std::to_string(space.generators().size()));
    const auto maps = sample_space(space, o.budget, o.seed);
    const auto verdicts = parallel_map<MapVerdict>(maps.size(), [&](std::size_t i) {
      const auto theta = unvec(maps[i], d);
      if (is_zero(maps[i]) || !is_k_commuting(g, theta, o.k).holds) return MapVerdict{};
      return MapVerdict{false, "nonzero k-commuting derivation"};
    });
    for (std::size_t i = 0; i < maps.size(); ++i)
      rep.check("theorem.map" + std::to_string(i), "nonzero derivation is not k-commuting", verdicts[i].pass,
                verdicts[i].witness);
    return emit(rep, out);
  }

  const auto space = commuting_space(g, o.k);
  rep.fact("commuting space rank", std::to_string(space.generators().size()));
  const auto maps = sample_space(space, o.budget, o.seed);

  bool hypotheses = false;
  if (o.mode == "thm25" || o.mode == "steps") {
    const auto hyp = check_thm_2_5_hypotheses(g, o.k);
    hypotheses = hyp.all();
    rep.fact("hypotheses (cond1, cond2, cond3)", std::string(hyp.cond1 ? "true" : "false") + ", " +
                                                     (hyp.cond2 ? "true" : "false") + ", " +
                                                     (hyp.cond3 ? "true" : "false"));
    if (hyp.m0) rep.fact("witness m0", show(r, *hyp.m0));
    if (hyp.n0) rep.fact("witness n0", show(r, *hyp.n0));
    if (o.mode == "steps" && !hypotheses) fail(ErrorKind::HypothesesNotMet, "step identities need the hypotheses");
  }

  std::string prefix, anchor;
  std::function<MapVerdict(const LinMap<S>&)> check;
  if (o.mode == "prop22") {
    prefix = "structure.";
    anchor = "all structure conditions hold";
    check = [&](const LinMap<S>& theta) { return from_report(verify_prop_2_2(g, theta, o.k)); };
  } else if (o.mode == "steps") {
    prefix = "steps.";
    anchor = "all intermediate identities hold";
    check = [&](const LinMap<S>& theta) { return from_report(verify_step_invariants(g, theta, o.k)); };
  } else if (hypotheses) {
    prefix = "theorem.";
    anchor = "Theta(X) = XC + Omega(X) with C central, Omega central-valued";
    check = [&](const LinMap<S>& theta) {
      try {
        const auto pf = construct_proper_form(g, theta, o.k);
        const LinMap<S> back = canon(r, LinMap<S>(g.algebra().right_mult(pf.c) + pf.omega));
        if (!(back == canon(r, theta))) return MapVerdict{false, "reassembly differs"};
        return from_report(verify_step_invariants(g, theta, o.k));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TheoremViolation) throw;
        return MapVerdict{false, e.what()};
      }
    };
  } else {
    prefix = "proper.";
    anchor = "a properness certificate exists";
    check = [&](const LinMap<S>& theta) {
      return properness_certificate(g, theta) ? MapVerdict{} : MapVerdict{false, show_map(g, theta)};
    };
  }
  const auto verdicts =
      parallel_map<MapVerdict>(maps.size(), [&](std::size_t i) { return check(unvec(maps[i], d)); });
  const auto gens = space.generators().size();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto what = i < gens ? "generator " + std::to_string(i) : "combination " + std::to_string(i - gens);
    rep.check(prefix + "map" + std::to_string(i), anchor + " (" + what + ")", verdicts[i].pass, verdicts[i].witness);
  }
  return emit(rep, out);
}

int run_sweep(const SweepOptions& o, const Output& out) {
  const auto doc = load(o.context, kContextSchema);
  return with_ring(document_ring(doc), [&](const auto& r) { return sweep(r, doc, o, out); });
}

// ------------------------------------------------------------------ family

struct FamilyOptions {
  std::string kind;
  std::string ring = "zmod:3";
  int n = 2;
  int split = 1;
  std::string d;
  bool lower = false;
  std::string gamma;
  std::string out;
};

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_on(text, ',')) {
    try {
      out.push_back(std::stoi(trim(part)));
    } catch (const std::logic_error&) {
      fail(ErrorKind::BadInput, "block sizes must be integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) fail(ErrorKind::BadInput, "--d needs block sizes like 2,1");
  return out;
}

template <class S>
S parse_scalar(const Ring<S>& r, const std::string& text) {
  if constexpr (std::is_same_v<S, Zn>) {
    try {
      return r.from_int(std::stoll(text));
    } catch (const std::logic_error&) {
      fail(ErrorKind::BadInput, "bad scalar \"" + text + "\"");
    }
  } else {
    return Rational::parse(text);
  }
}

template <class S>
int family(const Ring<S>& r, const FamilyOptions& o) {
  Json doc;
  if (o.kind == "full") {
    doc = context_to_json(full_matrix_gma(r, o.n, o.split).context());
  } else if (o.kind == "triangular") {
    doc = context_to_json(triangular_gma(r, o.n, o.split, o.lower).context());
  } else if (o.kind == "block") {
    doc = context_to_json(block_triangular_gma(r, parse_sizes(o.d), o.split, o.lower).context());
  } else {
    if (o.gamma.empty()) fail(ErrorKind::BadInput, "--gamma is required for inflated algebras");
    const auto base = ground_algebra(r);
    std::vector<std::vector<Vector<S>>> gamma;
    for (const auto& row : split_on(o.gamma, ';')) {
      gamma.emplace_back();
      for (const auto& entry : split_on(row, ','))
        gamma.back().push_back(canon(r, Vector<S>(parse_scalar(r, trim(entry)) * base.unit())));
    }
    const int n = static_cast<int>(gamma.size());
    const auto inf = inflated_algebra(InflatedSpec<S>{base, n, gamma});
    doc = algebra_to_json(inf.algebra);
  }
  const auto text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
  return kPass;
}

int run_family(const FamilyOptions& o) {
  return with_ring(parse_ring(o.ring), [&](const auto& r) { return family(r, o); });
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--json", out.json_path, "also write the JSON report here");
  cmd->add_option("--md", out.md_path, "also write the markdown report here");
  cmd->add_flag("--markdown", out.markdown, "print markdown instead of JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized matrix algebras: contexts, commuting maps, derivations"};
  app.require_subcommand(1);
  Output out;

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check the Morita context axioms");
  validate->add_option("context", validate_path, "context JSON")->required();
  add_output_flags(validate, out);

  std::string build_path, emit_path;
  auto* build = app.add_subcommand("build", "assemble the algebra [A M; N B]");
  build->add_option("context", build_path, "context JSON")->required();
  build->add_option("--emit", emit_path, "algebra JSON to write")->required();

  ClassifyOptions co;
  auto* classify = app.add_subcommand("classify", "classify one linear map");
  classify->add_option("context", co.context, "context JSON")->required();
  classify->add_option("map", co.map, "map JSON")->required();
  classify->add_option("--k", co.k, "bracket depth")->check(CLI::PositiveNumber);
  classify->add_flag("--oracle", co.oracle, "cross-check with exhaustive scans");
  classify->add_option("--mode", co.mode, "all, prop22, thm25 or cert")
      ->check(CLI::IsMember({"all", "prop22", "thm25", "cert"}));
  add_output_flags(classify, out);

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "check every map of a solution space");
  sweep->add_option("context", so.context, "context JSON")->required();
  sweep->add_option("--k", so.k, "bracket depth")->check(CLI::PositiveNumber);
  sweep->add_option("--mode", so.mode, "prop22, thm25, prop24 or steps")
      ->check(CLI::IsMember({"prop22", "thm25", "prop24", "steps"}));
  sweep->add_option("--seed", so.seed, "seed for the random combinations");
  sweep->add_option("--budget", so.budget, "number of random combinations");
  add_output_flags(sweep, out);

  FamilyOptions fo;
  auto* fam = app.add_subcommand("family", "emit a standard context or algebra");
  fam->add_option("--kind", fo.kind, "full, triangular, block or inflated")
      ->required()
      ->check(CLI::IsMember({"full", "triangular", "block", "inflated"}));
  fam->add_option("--ring", fo.ring, "zmod:N or q");
  fam->add_option("--n", fo.n, "matrix size");
  fam->add_option("--split", fo.split, "indices (or blocks) in the A corner");
  fam->add_option("--d", fo.d, "block sizes, e.g. 2,1");
  fam->add_flag("--lower", fo.lower, "lower triangular variant");
  fam->add_option("--gamma", fo.gamma, "rows separated by ';', entries by ','");
  fam->add_option("--out", fo.out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return run_validate(validate_path, out);
    if (*build) return run_build(build_path, emit_path);
    if (*classify) return run_classify(co, out);
    if (*sweep) return run_sweep(so, out);
    if (*fam) return run_family(fo);
  } catch (const Error& e) {
    std::cerr << "gmalg: " << e.what() << "\n";
    return e.kind() == ErrorKind::TheoremViolation ? kViolation : kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gmalg: malformed JSON: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "gmalg: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
