#include "report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "ngcat/category.hpp"
#include "ngcat/explicit_cocycles.hpp"
#include "ngcat/families.hpp"
#include "ngcat/invertibles.hpp"
#include "ngcat/serialize.hpp"

namespace ngcat::cli {

namespace {

using Json = nlohmann::ordered_json;

double rounded(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Json exact(const CycInt& v) {
  const auto a = v.approx();
  return Json{{"exact", v.to_string()}, {"approx", {rounded(a.real()), rounded(a.imag())}}};
}

Json base_parameters(const Options& o) {
  return Json{{"n", o.n}, {"l", o.l}, {"N", o.modulus}, {"seed", o.seed}, {"samples", o.samples}};
}

Report start(const std::string& command, Json parameters) {
  Report r;
  r.command = command;
  r.parameters = std::move(parameters);
  return r;
}

// Runs `body`, turning library errors into a failing verdict.
template <class F>
void guarded(Report& r, const std::string& what, F&& body) {
  try {
    body();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    r.check(what, false, e.what());
  }
}

Json character_on_generators(const SimpleObject& s) {
  Json out = Json::array();
  const auto& sg = *s.stabilizer_group;
  if (!sg.cyclic_cert()) return out;
  for (const auto& f : *sg.cyclic_cert()) {
    out.push_back(Json{{"generator", sg.label(f.generator)}, {"exponent", s.character.values[f.generator]}});
  }
  return out;
}

bool is_unit(const GTCategory& cat, const SimpleObject& s) {
  if (s.coset != cat.cosets.coset_of(cat.G->identity())) return false;
  for (int v : s.character.values) {
    if (v != 0) return false;
  }
  return true;
}

CycInt expected_nu2(const Options& o, int l) { return CycInt::from_integer(l % 2 == 0 ? 1 : -1, o.modulus); }

CycInt expected_nu3(const Options& o, int n, int l) {
  return CycInt::from_integer(1LL << n, o.modulus) *
         CycInt::root_of_unity(-static_cast<long long>(o.modulus / 3) * l, o.modulus);
}

bool projective_identity(const GTCategory& cat, const SimpleObject& s) {
  const auto m = schur_multiplier(cat.omega, s.rep, cat.H);
  const auto& sg = *s.stabilizer_group;
  const int n = cat.omega.modulus();
  for (Elem a = 0; a < sg.order(); ++a)
    for (Elem b = 0; b < sg.order(); ++b) {
      if ((s.character.values[a] + s.character.values[b]) % n !=
          (m.cocycle.at(a, b) + s.character.values[sg.mul(a, b)]) % n) {
        return false;
      }
    }
  return true;
}

int extraspecial_involutions(int n, bool plus) { return (1 << (2 * n)) + (plus ? 1 : -1) * (1 << n) - 1; }

struct GammaResult {
  int order = 0;
  bool extraspecial = false;
  int involutions = 0;
  std::string type;
  bool nu_cocycle = false;
  bool center_is_chi_squared = false;
  bool isomorphic_to_reference = false;
  bool explicit_eta_isomorphic = false;
};

GammaResult analyse_gamma(const GnFamily& fam, const GTCategory& cat, const Options& o) {
  GammaResult g;
  const TwistData t = compute_K(cat);
  g.nu_cocycle = nu_is_cocycle(t);
  const auto dual = dual_group(*t.H_group, o.modulus);
  const ExtensionGroup ext = build_extension(t, dual);
  const auto fp = fingerprint(ext.group);
  g.order = fp.order;
  g.extraspecial = fp.is_extraspecial_2group;
  g.involutions = fp.order_statistics.count(2) ? fp.order_statistics.at(2) : 0;
  const int n = fam.n;
  if (g.involutions == extraspecial_involutions(n, true)) {
    g.type = extraspecial_name(n, true);
  } else if (g.involutions == extraspecial_involutions(n, false)) {
    g.type = extraspecial_name(n, false);
  } else {
    g.type = "unidentified";
  }
  // χ is dual[1]; (χ², e) has index 2.
  const Subgroup z = center(ext.group);
  g.center_is_chi_squared = z.members() == std::vector<Elem>{ext.group->identity(), 2};
  const bool plus = g.type == extraspecial_name(n, true);
  g.isomorphic_to_reference = g.type != "unidentified" && isomorphic(ext.group, extraspecial_reference(n, plus));
  const TwistData te = compute_K(cat, f0_power_eta(fam, cat.l, o.modulus));
  g.explicit_eta_isomorphic = isomorphic(ext.group, build_extension(te, dual).group);
  return g;
}

}  // namespace

void Report::check(std::string invariant, bool pass, std::string detail) {
  verdicts.push_back(Verdict{std::move(invariant), pass, std::move(detail)});
}

bool Report::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return !verdicts.empty();
}

void validate(const Options& o) {
  if (o.n < 1 || o.n > 3) throw UsageError("--n must be 1, 2 or 3");
  if (o.l < 0 || o.l > 5) throw UsageError("--l must lie in 0..5");
  if (o.kmax < 1 || o.kmax > 12) throw UsageError("--kmax must lie in 1..12");
  if (o.modulus < 36 || o.modulus > 360 || o.modulus % 36 != 0) {
    throw UsageError("--N must be a multiple of 36 no larger than 360");
  }
  if (o.samples < 1) throw UsageError("--samples must be positive");
}

Report cmd_verify_cocycles(const Options& o) {
  Report r = start("verify-cocycles", base_parameters(o));
  r.parameters.erase("l");
  const int N = o.modulus;
  guarded(r, "cocycle construction", [&] {
    const Cochain w0 = omega0(N);
    r.check("d(omega0) = 1 on S3^4", is_cocycle(w0), std::to_string(w0.tuple_count() * 6) + " quadruples");
    r.check("omega0 normalized", w0.is_normalized());

    const Cochain w = adapted_omega(N);
    const std::size_t adapted = check_adapted(w, s4_cyclic_subgroup(), 0, 0, std::numeric_limits<std::size_t>::max());
    r.check("omega(g1,g2,h) = 1 on S4 x S4 x H", true, std::to_string(adapted) + " triples");
    r.check("closed form equals inf(omega0)·d(xi)", w.equals(adapted_omega_closed_form(N)),
            std::to_string(w.tuple_count()) + " triples");
    r.check("omega normalized", w.is_normalized());

    const GnFamily fam = build_Gn(o.n);
    const Cochain wn = omega_n(fam, N);
    const bool exhaustive = o.n == 1;
    std::string detail;
    try {
      const std::size_t count =
          check_adapted(wn, fam.H, o.samples, o.seed, exhaustive ? std::numeric_limits<std::size_t>::max() : 0);
      detail = std::to_string(count) + (exhaustive ? " triples" : " sampled triples, seed " + std::to_string(o.seed));
      r.check("omega_n adapted for H_n", true, detail);
    } catch (const CochainError& e) {
      r.check("omega_n adapted for H_n", false, e.what());
    }
    std::mt19937_64 rng(o.seed);
    if (exhaustive) {
      r.check("d(omega_n) = 1", is_cocycle(wn), "exhaustive");
    } else {
      r.check("d(omega_n) = 1", is_cocycle_sampled(wn, o.samples, rng),
              std::to_string(o.samples) + " sampled quadruples, seed " + std::to_string(o.seed));
    }

    bool pattern = true;
    for (int l = 0; l <= 6; ++l) {
      const bool solvable = solve_coboundary(w0.power(l)).has_value();
      r.rows.push_back(Json{{"l", l}, {"omega0^l coboundary", solvable}});
      pattern = pattern && solvable == (l == 0 || l == 6);
    }
    r.check("[omega0^l] trivial exactly for l in {0,6}", pattern);
  });
  return r;
}

Report cmd_category(const Options& o) {
  Report r = start("category", base_parameters(o));
  guarded(r, "category construction", [&] {
    const GnFamily fam = build_Gn(o.n);
    const GTCategory cat = gn_category(fam, o.l, o.modulus, o.samples, o.seed);
    const auto all = simples(cat);
    bool identities = true;
    for (const auto& s : all) {
      identities = identities && projective_identity(cat, s);
      r.rows.push_back(Json{{"coset_rep", cat.G->label(s.rep)},
                            {"fpdim", s.fpdim},
                            {"stabilizer_order", s.stabilizer.size()},
                            {"character", character_on_generators(s)},
                            {"nu1", exact(fs_indicator(cat, s, 1))},
                            {"nu2", exact(fs_indicator(cat, s, 2))},
                            {"nu3", exact(fs_indicator(cat, s, 3))}});
    }
    r.check("projective character identity for every simple", identities);
    const auto ng = near_group_check(cat, all);
    r.check("global dimension equals |G_n|", true, std::to_string(cat.G->order()));
    r.check("invertible simples = 2^(2n+1)", ng.invertible_count == 1 << (2 * o.n + 1),
            std::to_string(ng.invertible_count));
    r.check("FPdim rho = 2^(n+1)", ng.d == 1 << (o.n + 1), std::to_string(ng.d));
    r.check("near-group multiplicity m = 2^n", ng.m == 1 << o.n, std::to_string(ng.m));
    r.check("rho lies over the coset of gamma2", ng.rho.rep == fam.gamma2, cat.G->label(ng.rho.rep));
  });
  return r;
}

Report cmd_indicators(const Options& o) {
  Json params = base_parameters(o);
  params["kmax"] = o.kmax;
  Report r = start("indicators", std::move(params));
  guarded(r, "indicator computation", [&] {
    const GnFamily fam = build_Gn(o.n);
    const GTCategory cat = gn_category(fam, o.l, o.modulus, o.samples, o.seed);
    bool unit_detector = true;
    for (const auto& s : simples(cat)) {
      Json nus = Json::array();
      for (int k = 1; k <= o.kmax; ++k) {
        const CycInt v = fs_indicator(cat, s, k);
        nus.push_back(exact(v));
        if (k == 1) unit_detector = unit_detector && v == CycInt::from_integer(is_unit(cat, s) ? 1 : 0, o.modulus);
        if (k == 2 && s.fpdim > 1) {
          r.check("nu2(rho) = (-1)^l", v == expected_nu2(o, o.l), v.to_string());
        }
        if (k == 3 && s.fpdim > 1) {
          r.check("nu3(rho) = 2^n exp(-2πil/3)", v == expected_nu3(o, o.n, o.l), v.to_string());
        }
      }
      r.rows.push_back(Json{{"coset_rep", cat.G->label(s.rep)},
                            {"fpdim", s.fpdim},
                            {"character", character_on_generators(s)},
                            {"nu", std::move(nus)}});
    }
    r.check("nu1 is 1 on the unit and 0 elsewhere", unit_detector);

    const auto& G = *cat.G;
    bool closed = true;
    for (Elem h : cat.H.members()) {
      const Elem x = G.mul(fam.gamma2, h);
      for (int k = 1; k <= o.kmax; ++k) {
        long long acc = 0;
        for (int j = 1; j <= k; ++j) acc -= cat.omega.at(x, G.pow(G.inv(x), j), x);
        closed = closed && pi(x, -k, cat.omega) == static_cast<int>(((acc % o.modulus) + o.modulus) % o.modulus);
      }
    }
    r.check("pi_{-k} equals the closed product on gamma2 H_n", closed, "k <= " + std::to_string(o.kmax));
  });
  return r;
}

Report cmd_invertibles(const Options& o) {
  Report r = start("invertibles", base_parameters(o));
  guarded(r, "invertible group computation", [&] {
    const GnFamily fam = build_Gn(o.n);
    const GTCategory cat = gn_category(fam, o.l, o.modulus, o.samples, o.seed);
    const GammaResult g = analyse_gamma(fam, cat, o);
    const bool plus = o.l % 2 == 0;
    r.rows.push_back(Json{{"n", o.n},
                          {"l", o.l},
                          {"order", g.order},
                          {"extraspecial", g.extraspecial},
                          {"involutions", g.involutions},
                          {"identified_type", g.type}});
    r.check("nu 2-cocycle identity on K^3", g.nu_cocycle);
    r.check("|Gamma| = 2^(2n+1)", g.order == 1 << (2 * o.n + 1), std::to_string(g.order));
    r.check("Gamma extraspecial", g.extraspecial);
    r.check("center of Gamma generated by chi^2", g.center_is_chi_squared);
    r.check("type matches parity of l", g.type == extraspecial_name(o.n, plus), g.type);
    r.check("isomorphic to the reference central product", g.isomorphic_to_reference);
    r.check("explicit eta gives an isomorphic group", g.explicit_eta_isomorphic);
  });
  return r;
}

Report cmd_full(const Options& o) {
  Json params{{"nmax", o.n}, {"N", o.modulus}, {"seed", o.seed}, {"samples", o.samples}};
  Report r = start("full", std::move(params));
  for (int n = 1; n <= o.n; ++n) {
    std::set<std::pair<std::string, std::string>> seen;
    guarded(r, "n=" + std::to_string(n) + " computation", [&] {
      const GnFamily fam = build_Gn(n);
      for (int l = 0; l < 6; ++l) {
        const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l) + ": ";
        const GTCategory cat = gn_category(fam, l, o.modulus, o.samples, o.seed);
        const auto all = simples(cat);
        const auto ng = near_group_check(cat, all);
        const CycInt nu2 = fs_indicator(cat, ng.rho, 2);
        const CycInt nu3 = fs_indicator(cat, ng.rho, 3);
        const GammaResult g = analyse_gamma(fam, cat, o);
        const bool plus = l % 2 == 0;
        const bool near = ng.invertible_count == 1 << (2 * n + 1) && ng.d == 1 << (n + 1) && ng.m == 1 << n;
        const bool nu2_ok = nu2 == expected_nu2(o, l);
        const bool nu3_ok = nu3 == expected_nu3(o, n, l);
        const bool gamma_ok = g.extraspecial && g.nu_cocycle && g.type == extraspecial_name(n, plus) &&
                              g.isomorphic_to_reference && g.explicit_eta_isomorphic;
        r.check(tag + "near-group data", near);
        r.check(tag + "nu2(rho) = (-1)^l", nu2_ok, nu2.to_string());
        r.check(tag + "nu3(rho) = 2^n exp(-2πil/3)", nu3_ok, nu3.to_string());
        r.check(tag + "Gamma identified", gamma_ok, g.type);
        seen.emplace(nu2.to_string(), nu3.to_string());
        r.rows.push_back(Json{{"n", n},
                              {"l", l},
                              {"simples", all.size()},
                              {"fpdim_rho", ng.d},
                              {"nu2", exact(nu2)},
                              {"nu3", exact(nu3)},
                              {"gamma", g.type},
                              {"pass", near && nu2_ok && nu3_ok && gamma_ok}});
      }
      r.check("n=" + std::to_string(n) + ": (nu2, nu3) pairwise distinct over l", seen.size() == 6);
    });
  }
  return r;
}

Report cmd_export(const Options& o) {
  Report r = start("export", base_parameters(o));
  guarded(r, "export", [&] {
    const GnFamily fam = build_Gn(o.n);
    const Cochain w = omega_n(fam, o.modulus).power(o.l);
    const std::string ref = "G" + std::to_string(o.n);
    r.rows.push_back(Json{{"name", ref}, {"group", group_to_json(*fam.group)}});
    r.rows.push_back(Json{{"name", "H" + std::to_string(o.n)}, {"members", fam.H.members()}});
    r.rows.push_back(Json{{"name", "omega^l"}, {"cochain", cochain_to_json(w, ref, "S4")}});
    const GroupPtr back = group_from_json(group_to_json(*fam.group));
    r.check("group document round-trips", std::equal(back->table().begin(), back->table().end(),
                                                     fam.group->table().begin(), fam.group->table().end()));
  });
  return r;
}

Report cmd_inspect_group(const std::string& path) {
  Report r = start("inspect-group", Json{{"file", path}});
  guarded(r, "group document", [&] {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    const GroupPtr g = group_from_json(nlohmann::json::parse(in));
    g->verify_axioms();
    r.check("group axioms", true, std::to_string(g->order()) + " elements");
    const auto fp = fingerprint(g);
    Json stats = Json::object();
    for (const auto& [k, v] : fp.order_statistics) stats[std::to_string(k)] = v;
    r.rows.push_back(Json{{"order", fp.order},
                          {"center_order", fp.center_order},
                          {"derived_order", fp.derived_order},
                          {"exponent", fp.exponent},
                          {"order_statistics", std::move(stats)},
                          {"extraspecial", fp.is_extraspecial_2group}});
  });
  return r;
}

Report run(const std::string& command, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  if (command == "verify-cocycles") {
    r = cmd_verify_cocycles(o);
  } else if (command == "category") {
    r = cmd_category(o);
  } else if (command == "indicators") {
    r = cmd_indicators(o);
  } else if (command == "invertibles") {
    r = cmd_invertibles(o);
  } else if (command == "full") {
    r = cmd_full(o);
  } else if (command == "export") {
    r = cmd_export(o);
  } else {
    throw UsageError("unknown command " + command);
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string render_json(const Report& r, bool timing) {
  Json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["rows"] = r.rows;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(Json{{"invariant", v.invariant}, {"pass", v.pass}, {"detail", v.detail}});
  }
  j["verdicts"] = std::move(verdicts);
  j["pass"] = r.all_pass();
  if (timing) j["runtime_seconds"] = r.runtime_seconds;
  return j.dump(2) + "\n";
}

namespace {

std::string join(const Json& v, const char* sep);

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("exact")) return v["exact"].get<std::string>();
  if (v.is_array()) return join(v, ";");
  if (v.is_object()) return join(v, ":");
  return v.dump();
}

std::string join(const Json& v, const char* sep) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += sep;
    out += cell(x);
  }
  return out;
}

}  // namespace

std::string render_tsv(const Report& r, bool timing) {
  std::ostringstream out;
  out << "#command\t" << r.command << "\n";
  for (const auto& [k, v] : r.parameters.items()) out << "#param\t" << k << "\t" << cell(v) << "\n";
  if (!r.rows.empty()) {
    bool first = true;
    for (const auto& [k, v] : r.rows.front().items()) {
      out << (first ? "" : "\t") << k;
      first = false;
    }
    out << "\n";
    for (const auto& row : r.rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        out << (first ? "" : "\t") << cell(v);
        first = false;
      }
      out << "\n";
    }
  }
  for (const auto& v : r.verdicts) {
    out << "verdict\t" << v.invariant << "\t" << (v.pass ? "PASS" : "FAIL") << "\t" << v.detail << "\n";
  }
  out << "pass\t" << (r.all_pass() ? "true" : "false") << "\n";
  if (timing) out << "runtime_seconds\t" << r.runtime_seconds << "\n";
  return out.str();
}

}  // namespace ngcat::cli
