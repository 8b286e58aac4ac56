// qhgr: command-line access to quantum cohomology of Grassmannians.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 selftest failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>

#include "qhgr/degree_zero.hpp"
#include "qhgr/gelfand_cetlin.hpp"
#include "qhgr/presentation.hpp"
#include "qhgr/qh.hpp"
#include "qhgr/selftest.hpp"

using namespace qhgr;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kSelftestFailed = 3;

struct Options {
  std::string format = "text";
  int k = 0;
  int n = 0;
  std::string field = "Q";
  std::string lhs, rhs;
  int j = 0;
  bool transposed = false;
  bool variant = false;
  u64 characteristic = 0;
  u64 p = 0;
  int pairs = 100;
  std::uint64_t seed = 0;
  int count = 1;
  bool quaternionic = false;
  double tol = 1e-8;
  bool full = false;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (as_json(o)) std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

int cmd_product(const Options& o) {
  const GrContext ctx(o.k, o.n);
  const FieldCtx f = FieldCtx::parse(o.field);
  const auto result = quantum_product(QhElement::parse(ctx, f, o.lhs), QhElement::parse(ctx, f, o.rhs));
  emit(o, json{{"k", o.k}, {"n", o.n}, {"field", f.name()}, {"product", result.to_string()}}, result.to_string());
  return 0;
}

int cmd_pieri(const Options& o) {
  const GrContext ctx(o.k, o.n);
  const FieldCtx f = FieldCtx::parse(o.field);
  const auto e = QhElement::parse(ctx, f, o.lhs);
  const auto result = o.transposed ? transposed_pieri_multiply(e, o.j) : pieri_multiply(e, o.j);
  emit(o, json{{"k", o.k}, {"n", o.n}, {"field", f.name()}, {"j", o.j}, {"transposed", o.transposed},
               {"result", result.to_string()}},
       result.to_string());
  return 0;
}

int cmd_matrix(const Options& o) {
  const FieldCtx f = FieldCtx::parse(o.field);
  const auto which = o.variant ? DegreeZeroElement::Variant : DegreeZeroElement::Primary;
  const SquareMatrix m = degree_zero_action(o.n, f, which);
  const Poly pi = char_poly(m);
  const bool matches = !o.variant && m == closed_form_matrix(o.n, f);
  const bool identity = !o.variant && satisfies_charpoly_identity(pi, o.n);
  std::vector<std::string> basis;
  for (const auto& b : graded_basis(GrContext(2, o.n), o.n - 2)) basis.push_back(b.diagram.to_string());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < m.size(); ++r) {
    rows.emplace_back();
    for (std::size_t c = 0; c < m.size(); ++c) rows.back().push_back(f.format(m.at(r, c)));
  }
  json j{{"n", o.n}, {"field", f.name()}, {"element", o.variant ? "variant" : "primary"}, {"basis", basis},
         {"matrix", rows}, {"charPoly", pi.to_string()}};
  if (!o.variant) {
    j["matchesClosedForm"] = matches;
    j["identityHolds"] = identity;
  }
  std::string text = "basis:";
  for (const auto& b : basis) text += " " + b;
  text += "\n" + m.to_string() + "\ncharacteristic polynomial: " + pi.to_string();
  if (!o.variant) {
    text += std::string("\nclosed form: ") + (matches ? "match" : "MISMATCH");
    text += std::string("\nidentity x^D pi(-x-1/x): ") + (identity ? "holds" : "FAILS");
  }
  emit(o, j, text);
  return (o.variant || (matches && identity)) ? 0 : kComputation;
}

int cmd_classify(const Options& o) {
  // The verdict is JSON in either format.
  std::cout << json::parse(classify(o.k, o.n, o.characteristic).to_json()).dump(as_json(o) ? 2 : -1) << "\n";
  return 0;
}

int cmd_orbits(const Options& o) {
  const OrbitDecomposition d = orbit_decomposition(o.n > 0 ? static_cast<u64>(o.n) : 0, o.p);
  json orbits = json::array();
  for (const auto& orbit : d.orbits) {
    json pairs = json::array();
    for (const auto& [a, b] : orbit) pairs.push_back({a, b});
    orbits.push_back(pairs);
  }
  emit(o, json{{"n", o.n}, {"p", o.p}, {"orbitCount", d.count()}, {"sizes", d.sizes()}, {"orbits", orbits}},
       std::to_string(d.count()) + " orbits: " + d.to_string());
  return 0;
}

int cmd_evcheck(const Options& o) {
  const GrContext ctx(o.k, o.n);
  const FieldCtx f = FieldCtx::parse(o.field);
  const EvContext ev = make_ev_context(ctx, f);
  const auto multisets = admissible_multisets(ev);
  std::mt19937_64 rng(o.seed);
  const auto diagrams = enumerate_diagrams(ctx);
  auto random_element = [&] {
    QhElement e(ctx, f);
    for (int t = 0; t < 3; ++t) {
      const auto& d = diagrams[rng() % diagrams.size()];
      e.add_term(d, static_cast<int>(rng() % 3) - 1, f.from_int(static_cast<i64>(rng() % 5) + 1));
    }
    return e;
  };
  json reports = json::array();
  bool ideal_ok = true;
  std::string text;
  for (const auto& j : multisets) {
    const IdealReport r = verify_ideal_vanishing(ev, j);
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"generator", c.generator}, {"value", ev.splitting.format(c.value)}, {"vanishes", c.vanishes}});
    }
    reports.push_back({{"multiset", r.multiset}, {"checks", checks}, {"allVanish", r.all_vanish()}});
    ideal_ok = ideal_ok && r.all_vanish();
    text += r.multiset + (r.all_vanish() ? " ideal vanishes\n" : " ideal DOES NOT vanish\n");
  }
  int failures = 0;
  for (int t = 0; t < o.pairs; ++t) {
    const auto a = random_element();
    const auto b = random_element();
    const auto ab = quantum_product(a, b);
    for (const auto& j : multisets) {
      failures += !(ev_map(ev, j, ab) == ev.splitting.mul(ev_map(ev, j, a), ev_map(ev, j, b)));
    }
  }
  text += "splitting field " + ev.splitting.name() + ", xi = " + ev.splitting.format(ev.xi) + ", " +
          std::to_string(multisets.size()) + " multisets, " + std::to_string(o.pairs) + " product pairs, " +
          std::to_string(failures) + " multiplicativity failures";
  emit(o,
       json{{"k", o.k}, {"n", o.n}, {"field", f.name()}, {"splittingField", ev.splitting.name()},
            {"xi", ev.splitting.format(ev.xi)}, {"multisets", reports}, {"pairs", o.pairs},
            {"multiplicativityFailures", failures}},
       text);
  return (ideal_ok && failures == 0) ? 0 : kComputation;
}

int cmd_gc_map(const Options& o) {
  const GrContext ctx(o.k, o.n);
  json rows = json::array();
  std::string text = "seed";
  for (int i = 1; i <= ctx.k(); ++i) {
    for (int c = 1; c <= ctx.cols(); ++c) text += ",z" + std::to_string(i) + "_" + std::to_string(c);
  }
  for (int s = 0; s < o.count; ++s) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(s);
    const Frame frame = o.quaternionic ? Frame::quaternionic(ctx, seed) : Frame::random(ctx, seed);
    const GcValues v = gc_map(frame);
    text += "\n" + std::to_string(seed) + "," + v.to_csv_row();
    rows.push_back({{"seed", seed}, {"values", v.values}, {"violation", v.inequality_violation()}});
  }
  emit(o, json{{"k", o.k}, {"n", o.n}, {"quaternionic", o.quaternionic}, {"samples", rows}}, text);
  return 0;
}

int cmd_gc_critical(const Options& o) {
  const auto r = find_critical_point(GrContext(o.k, o.n), o.tol);
  std::cout << json::parse(r.to_json()).dump(as_json(o) ? 2 : -1) << "\n";
  return 0;
}

int cmd_selftest(const Options& o) {
  const auto results = run_acceptance(o.full ? SuiteTier::Full : SuiteTier::Fast,
                                      [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
  for (const auto& r : results) {
    if (!r.pass) return kSelftestFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cohomology of Grassmannians: products, degree-zero analysis, Gelfand-Cetlin checks"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  std::function<int(const Options&)> action;

  auto* product = app.add_subcommand("product", "Quantum product of two elements");
  product->add_option("k", o.k)->required();
  product->add_option("n", o.n)->required();
  product->add_option("FIELD", o.field, "Q, GF(p) or GF(p^m)")->required();
  product->add_option("A", o.lhs, "Element, e.g. \"σ[3,1] + q*σ[-]\"")->required();
  product->add_option("B", o.rhs)->required();
  add_format(product);
  product->callback([&] { action = cmd_product; });

  auto* pieri = app.add_subcommand("pieri", "Multiply by x_j (or a row of j boxes with --transposed)");
  pieri->add_option("k", o.k)->required();
  pieri->add_option("n", o.n)->required();
  pieri->add_option("FIELD", o.field)->required();
  pieri->add_option("j", o.j)->required();
  pieri->add_option("ELEM", o.lhs)->required();
  pieri->add_flag("--transposed", o.transposed);
  add_format(pieri);
  pieri->callback([&] { action = cmd_pieri; });

  auto* matrix = app.add_subcommand("matrix", "Degree-zero action on QH^{n-2}(Gr(2,n)) and its characteristic polynomial");
  matrix->add_option("n", o.n)->required()->check(CLI::Range(3, 200));
  matrix->add_option("FIELD", o.field)->required();
  matrix->add_flag("--variant", o.variant, "Use q^-1 x_2*v_1 instead of 1 - q^-1 x_2*v_1");
  add_format(matrix);
  matrix->callback([&] { action = cmd_matrix; });

  auto* cls = app.add_subcommand("classify", "Graded-field and spectral-diameter verdict (JSON)");
  cls->add_option("k", o.k)->required();
  cls->add_option("n", o.n)->required();
  cls->add_option("CHAR", o.characteristic, "0 or a prime")->required();
  add_format(cls);
  cls->callback([&] { action = cmd_classify; });

  auto* orbits = app.add_subcommand("orbits", "Orbits of {a,-a} under multiplication by p");
  orbits->add_option("n", o.n)->required();
  orbits->add_option("p", o.p)->required();
  add_format(orbits);
  orbits->callback([&] { action = cmd_orbits; });

  auto* evcheck = app.add_subcommand("evcheck", "Ideal vanishing and multiplicativity of the evaluation maps");
  evcheck->add_option("k", o.k)->required();
  evcheck->add_option("n", o.n)->required();
  evcheck->add_option("FIELD", o.field, "Q or GF(p)")->required();
  evcheck->add_option("--pairs", o.pairs, "Random product pairs")->check(CLI::NonNegativeNumber);
  evcheck->add_option("--seed", o.seed);
  add_format(evcheck);
  evcheck->callback([&] { action = cmd_evcheck; });

  auto* gc = app.add_subcommand("gc", "Gelfand-Cetlin tools");
  gc->require_subcommand(1);
  auto* gc_map_cmd = gc->add_subcommand("map", "Gelfand-Cetlin values of seeded frames (CSV)");
  gc_map_cmd->add_option("k", o.k)->required();
  gc_map_cmd->add_option("n", o.n)->required();
  gc_map_cmd->add_option("--seed", o.seed);
  gc_map_cmd->add_option("--count", o.count, "Number of consecutive seeds")->check(CLI::PositiveNumber);
  gc_map_cmd->add_flag("--quaternionic", o.quaternionic);
  add_format(gc_map_cmd);
  gc_map_cmd->callback([&] { action = cmd_gc_map; });
  auto* gc_crit = gc->add_subcommand("critical", "Critical point of the disk potential");
  gc_crit->add_option("k", o.k)->required();
  gc_crit->add_option("n", o.n)->required();
  gc_crit->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  add_format(gc_crit);
  gc_crit->callback([&] { action = cmd_gc_critical; });

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks (fast tier unless --full)");
  selftest->add_flag("--full", o.full);
  selftest->callback([&] { action = cmd_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }
  try {
    return action(o);
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
}
