// One line per acceptance criterion; exit status 0 only if all pass.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmalg/gmalg.hpp"
#include "gmalg/oracle.hpp"

using namespace gmalg;

namespace {

const Ring<Zn> F3(3);
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Fixture {
  std::string name;
  Algebra<Zn> algebra;
};

std::vector<oracle::Elem> elems(const Submodule<Zn>& s) {
  std::vector<oracle::Elem> out;
  for (const auto& v : *s.elements()) out.push_back(oracle::to_elem(v));
  return out;
}

std::vector<std::vector<Vector<Zn>>> diag_gamma(const Algebra<Zn>& base, std::int64_t x, std::int64_t y) {
  auto s = [&](std::int64_t c) { return canon(F3, Vector<Zn>(F3.from_int(c) * base.unit())); };
  return {{s(x), base.zero()}, {base.zero(), s(y)}};
}

InflatedAlgebra<Zn> inflated() { return inflated_algebra(InflatedSpec<Zn>{ground_algebra(F3), 2, diag_gamma(ground_algebra(F3), 1, 2)}); }

std::vector<LinMap<Zn>> random_maps(const Ring<Zn>& r, Eigen::Index d, std::size_t count, std::mt19937_64& rng) {
  std::vector<LinMap<Zn>> out;
  for (std::size_t c = 0; c < count; ++c) {
    LinMap<Zn> m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) m(i, j) = r.from_int(static_cast<std::int64_t>(rng() % r.modulus()));
    out.push_back(m);
  }
  return out;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::BadInput;
}

std::string kind_name(ErrorKind k) {
  std::ostringstream os;
  os << static_cast<int>(k);
  return os.str();
}

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<Fixture> fx{{"T2(Z/3)", triangular_gma(F3, 2, 1).algebra()},
                          {"T3(Z/3)", triangular_gma(F3, 3, 1).algebra()},
                          {"M2(Z/3)", full_matrix_gma(F3, 2, 1).algebra()},
                          {"M2(Z/5)", full_matrix_gma(Ring<Zn>(5), 2, 1).algebra()},
                          {"B(2,1)(Z/3)", block_triangular_gma(F3, {2, 1}, 1).algebra()},
                          {"inflated diag(1,2)", inflated().algebra}};
  std::mt19937_64 rng(kSeed);
  for (const auto& f : fx) {
    const auto& a = f.algebra;
    const auto& r = a.ring();
    o.require(elems(center(a)) == oracle::brute_center(a), f.name + ": center");
    for (int k = 1; k <= 3; ++k) {
      const auto tag = f.name + " k=" + std::to_string(k);
      o.require(elems(zk_set(a, k)) == oracle::brute_zk(a, k), tag + ": zk_set");
      std::vector<LinMap<Zn>> maps;
      for (const auto& v : sample_space(commuting_space(a, k), 5, rng())) maps.push_back(unvec(v, a.dim()));
      for (const auto& m : random_maps(r, a.dim(), 5, rng)) maps.push_back(m);
      maps.push_back(a.left_mult(a.basis(1)));
      for (const auto& theta : maps) {
        const auto mine = is_k_commuting(a, theta, k);
        const auto brute = oracle::brute_k_commuting(a, theta, k);
        o.require(mine.holds == !brute.has_value(), tag + ": is_k_commuting");
        if (!mine.holds && brute) o.require(oracle::to_elem(*mine.counterexample) == *brute, tag + ": counterexample");
        o.require(properness_certificate(a, theta).has_value() == oracle::brute_properness(a, theta).has_value(),
                  tag + ": properness");
      }
    }
  }
  return o;
}

Outcome full_matrix_proper() {
  Outcome o;
  const auto g = full_matrix_gma(F3, 2, 1);
  const auto& a = g.algebra();
  for (int k = 1; k <= 3; ++k) {
    const auto space = commuting_space(g, k);
    if (k == 1) {
      o.require(space.generators().size() == 5u, "k=1 rank is not 5");
      o.require(space == proper_span(a), "k=1 space differs from the proper span");
    }
    for (const auto& v : sample_space(space, 200, kSeed + k)) {
      const auto theta = unvec(v, a.dim());
      const auto c = properness_certificate(g, theta);
      o.require(c && certificate_holds(a, theta, *c), "k=" + std::to_string(k) + ": no certificate for " + to_string(F3, v));
    }
  }
  return o;
}

Outcome triangular_engel() {
  Outcome o;
  for (int n : {2, 3}) {
    const auto g = triangular_gma(F3, n, 1);
    const auto& a = g.algebra();
    for (int k = 1; k <= 3; ++k) {
      const auto tag = "T" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(oracle::brute_zk(a, k) == elems(scalar_multiples_of_unit(a)), tag + ": Z_k is not R1");
      const auto space = commuting_space(g, k);
      const auto all = space.elements();
      const auto maps = all ? *all : sample_space(space, 500, kSeed);
      for (const auto& v : maps) {
        const auto theta = unvec(v, a.dim());
        const auto c = properness_certificate(g, theta);
        o.require(c && certificate_holds(a, theta, *c), tag + ": improper map " + to_string(F3, v));
      }
    }
  }
  return o;
}

Outcome structure_sweep() {
  Outcome o;
  // M3(Z/3) has 3^9 elements, so only its generators are swept.
  const std::vector<std::pair<GMAlgebra<Zn>, std::size_t>> fixtures{
      {full_matrix_gma(F3, 2, 1), 20},          {full_matrix_gma(F3, 3, 1), 0},
      {full_matrix_gma(Ring<Zn>(5), 2, 1), 20}, {triangular_gma(F3, 2, 1), 20},
      {triangular_gma(F3, 3, 1), 20},           {triangular_gma(F3, 3, 2), 20},
      {block_triangular_gma(F3, {2, 1}, 1), 20}};
  for (const auto& [g, extra] : fixtures) {
    o.require(check_faithful(g.context()).both(), "fixture is not faithful");
    for (int k = 1; k <= 3; ++k) {
      const auto maps = sample_space(commuting_space(g, k), extra, kSeed + k);
      const auto failures = parallel_map<std::string>(maps.size(), [&](std::size_t i) {
        const auto rep = verify_prop_2_2(g, unvec(maps[i], g.dim()), k);
        return rep.all_pass() && rep.lines().size() == 20u ? std::string{} : rep.markdown();
      });
      for (const auto& f : failures) o.require(f.empty(), "failing structure report: " + f);
    }
  }
  return o;
}

Outcome derivations_vanish() {
  Outcome o;
  for (const auto& g : {full_matrix_gma(F3, 2, 1), triangular_gma(Ring<Zn>(5), 2, 1), block_triangular_gma(F3, {2, 1}, 1)})
    for (int k = 1; k <= 3; ++k) {
      o.require(commuting_derivations(g, k).generators().empty(), "nonzero commuting derivation");
      o.require(verify_prop_2_4(g, k), "derivation check failed");
    }
  return o;
}

Outcome proper_form_pipeline() {
  Outcome o;
  const auto m2 = full_matrix_gma(F3, 2, 1);
  const auto w = check_thm_2_5_hypotheses(m2, 1);
  o.require(w.all() && w.m0 && w.n0 && to_string(F3, *w.m0) == "(1)" && to_string(F3, *w.n0) == "(1)",
            "M2(Z/3) witness is not (1), (1)");
  for (const auto& g : {m2, triangular_gma(F3, 2, 1), triangular_gma(F3, 3, 1), full_matrix_gma(Ring<Zn>(5), 2, 1)}) {
    const auto& r = g.ring();
    for (int k = 1; k <= 3; ++k) {
      if (!check_thm_2_5_hypotheses(g, k).all()) continue;
      const auto space = commuting_space(g, k);
      const auto all = space.elements();
      const auto maps = all ? *all : sample_space(space, 200, kSeed);
      const auto failures = parallel_map<std::string>(maps.size(), [&](std::size_t i) {
        const auto& v = maps[i];
        const auto theta = unvec(v, g.dim());
        const auto pf = construct_proper_form(g, theta, k);
        const LinMap<Zn> rebuilt = canon(r, LinMap<Zn>(g.algebra().right_mult(pf.c) + pf.omega));
        if (to_string(r, vec(rebuilt)) != to_string(r, v)) return "lambda, zeta do not reproduce " + to_string(r, v);
        if (!(reassemble(g, decompose(g, theta)) == theta)) return "block reassembly differs on " + to_string(r, v);
        if (!verify_step_invariants(g, theta, k).all_pass()) return "step invariant failed on " + to_string(r, v);
        return std::string{};
      });
      for (const auto& f : failures) o.require(f.empty(), f);
    }
  }
  return o;
}

Outcome inflated_proper() {
  Outcome o;
  const auto inf = inflated();
  o.require(inf.sigma.has_value(), "no sigma");
  if (!inf.sigma) return o;
  const auto& ord = inf.ordinary;
  for (Eigen::Index i = 0; i < ord.dim(); ++i)
    for (Eigen::Index j = 0; j < ord.dim(); ++j)
      o.require(inf.algebra.mul(inf.sigma->col(i), inf.sigma->col(j)) == apply(F3, *inf.sigma, ord.product(i, j)),
                "sigma not multiplicative");
  for (int k = 1; k <= 3; ++k) {
    const auto twisted = commuting_space(inf.algebra, k);
    std::vector<Vector<Zn>> moved;
    for (const auto& v : twisted.generators()) moved.push_back(vec(transport_to_ordinary(inf, unvec(v, ord.dim()))));
    o.require(Submodule<Zn>(F3, ord.dim() * ord.dim(), moved) == commuting_space(ord, k), "transported space differs");
    o.require(twisted == proper_span(inf.algebra), "twisted space is not the proper span");
    for (const auto& v : *twisted.elements()) {
      const auto theta = unvec(v, ord.dim());
      const auto c = properness_certificate(inf.algebra, theta);
      o.require(c && certificate_holds(inf.algebra, theta, *c), "improper map on the inflated algebra");
    }
  }
  return o;
}

// A = R x R acting on M = R through the first factor only.
MoritaContext<Zn> unfaithful_context() {
  const auto e1 = unit_vector(F3, 2, 0), e2 = unit_vector(F3, 2, 1), z = zeros(F3, 2);
  Vector<Zn> one(2);
  one << Zn(1, 3), Zn(1, 3);
  Algebra<Zn> a(F3, {"u", "v"}, {{e1, z}, {z, e2}}, one);
  auto scalar = [](std::int64_t c) { return canon(F3, Matrix<Zn>(F3.from_int(c) * identity(F3, 1))); };
  Bimodule<Zn> m{1, {"m"}, {scalar(1), scalar(0)}, {scalar(1)}};
  Bimodule<Zn> n{0, {}, {zeros(F3, 0, 0)}, {zeros(F3, 0, 0), zeros(F3, 0, 0)}};
  return MoritaContext<Zn>(a, ground_algebra(F3), m, n, Pairing<Zn>{{zeros(F3, 2, 0)}}, Pairing<Zn>{{}});
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + GMALG_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome guards() {
  Outcome o;
  const Ring<Zn> z4(4);
  const auto g4 = full_matrix_gma(z4, 2, 1);
  const auto two = ErrorKind::TwoTorsion;
  o.require(kind_of([&] { check_thm_2_5_hypotheses(g4, 1); }) == two, "hypotheses accepted Z/4");
  o.require(kind_of([&] { construct_proper_form(g4, LinMap<Zn>(identity(z4, 4)), 1); }) == two,
            "proper form accepted Z/4");
  o.require(kind_of([&] { verify_prop_2_4(g4, 1); }) == two, "derivation check accepted Z/4");

  const auto dir = std::filesystem::temp_directory_path() / ("gmalg_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto ctx = (dir / "z4.json").string(), map = (dir / "id.json").string();
  write_text_file(map, R"({"schema":"gmalg.map/1","matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  o.require(run_cli("family --kind full --ring zmod:4 --n 2 --split 1 --out \"" + ctx + "\"") == 0, "family failed");
  const int code = run_cli("classify \"" + ctx + "\" \"" + map + "\" --mode thm25");
  o.require(code == 3, "classify on Z/4 exited " + std::to_string(code));
  o.require(run_cli("sweep \"" + ctx + "\" --mode prop24") == 3, "sweep prop24 on Z/4 did not exit 3");
  std::filesystem::remove_all(dir);

  const auto unf = build_gma(unfaithful_context());
  const auto nf = kind_of([&] { center_iso_phi(unf); });
  o.require(nf == ErrorKind::NotFaithful, "unfaithful context gave error kind " + kind_name(nf));
  o.require(kind_of([&] { check_thm_2_5_hypotheses(unf, 1); }) == ErrorKind::NotFaithful,
            "hypotheses accepted an unfaithful context");

  const auto g = full_matrix_gma(F3, 2, 1);
  auto dec = decompose(g, LinMap<Zn>(identity(F3, 4)));
  dec.delta(2)(0, 0) = F3.one();
  const auto rep = check_step_invariants(g, dec);
  const auto* line = rep.find("delta2_square");
  o.require(line && !line->pass, "corrupted delta2 passed");
  o.require(!rep.all_pass(), "corrupted decomposition passed");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence on six fixtures, k = 1..3", oracle_equivalence},
      {"every k-commuting map on M2(Z/3) is proper, rank 5 at k = 1", full_matrix_proper},
      {"Z_k(T_n(Z/3)) = R1 and commuting maps proper, n = 2, 3", triangular_engel},
      {"structure conditions hold across commuting spaces", structure_sweep},
      {"k-commuting derivations vanish", derivations_vanish},
      {"proper form pipeline and step invariants", proper_form_pipeline},
      {"inflated algebra: sigma multiplicative, maps proper", inflated_proper},
      {"guards: TwoTorsion, NotFaithful, corrupted delta2", guards},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first << "  (" << timing << ")";
    if (!o.pass) std::cout << "\n      " << o.detail;
    std::cout << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
