#include "toric/cli.hpp"

#include "toric/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

namespace toric {

namespace {

std::string join(const std::vector<Character>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s.empty() ? "(none)" : s;
}

OrthogonalSet load_divisor(const std::string& path, const std::string& datum) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open divisor file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  auto os = orthogonal_set_from_json(j, datum);
  const auto v = validate(os);
  if (!v.valid) {
    std::string where;
    if (v.failing_pair) where = " (cones " + v.failing_pair->first + ", " + v.failing_pair->second + ")";
    throw InputError("invalid orthogonal set" + where + ": " + v.message);
  }
  return os;
}

void require_convex(const OrthogonalSet& os) {
  if (!is_convex(os)) throw InputError("the divisor is not generated by its sections (psi_D is not convex)");
}

Character parse_root(const RootDatum& datum, const std::string& text) {
  Character alpha;
  try {
    alpha = parse_character(datum, text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad root: ") + e.what());
  }
  if (!datum.is_root(alpha)) throw InputError(to_string(alpha) + " is not a root of " + datum.name());
  return alpha;
}

RootDatum parse_datum(const std::string& name) {
  try {
    return RootDatum::parse(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// one line per check; a failing check prints its witnesses
struct Tally {
  std::ostream& out;
  bool json = false;
  std::size_t checks = 0;
  Json failures = Json::array();

  void record(bool ok, const std::string& what, const std::string& detail = "") {
    ++checks;
    if (!ok) {
      failures.push_back({{"check", what}, {"detail", detail}});
      if (!json) out << "FAIL " << what << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
  int finish(const std::string& theorem) {
    if (json) {
      out << Json{{"theorem", theorem}, {"checks", checks}, {"failures", failures}, {"ok", failures.empty()}}.dump(2)
          << "\n";
    } else {
      out << "theorem " << theorem << ": " << checks - failures.size() << "/" << checks << " checks passed\n";
    }
    return failures.empty() ? 0 : 1;
  }
};

struct VerifyOptions {
  std::string theorem;
  std::string datum;
  std::string batches;
  std::int64_t samples = 100;
  std::uint64_t seed = 1;
  std::int64_t bound = 5;
  std::int64_t n_max = 10;
  std::int64_t max_coord = 6;
  bool json = false;
};

int verify_surjectivity(const VerifyOptions& o, Tally& t, const std::string& fallback, DatumKind kind) {
  const auto datum = parse_datum(o.datum.empty() ? fallback : o.datum);
  if (datum.kind() != kind) throw InputError("theorem " + o.theorem + " is about " + fallback.substr(0, 2) + "_n");
  const auto fan = make_weyl_fan(datum);
  for (std::int64_t i = 0; i < o.samples; ++i) {
    const auto os = random_positive_orthogonal_set(fan, o.bound, o.seed + static_cast<std::uint64_t>(i));
    for (const auto& alpha : datum.positive_roots()) {
      const auto rep = phi_cokernel_dim(os, alpha);
      t.record(rep.coker_dim == 0,
               "seed " + std::to_string(o.seed + static_cast<std::uint64_t>(i)) + " alpha " + to_string(alpha),
               "missing " + join(rep.missing) + " divisor " + to_json(os).dump());
    }
  }
  return t.finish(o.theorem);
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
  Tally t{out, o.json};
  if (o.theorem == "A") {
    const auto datum = parse_datum(o.datum.empty() ? "G2" : o.datum);
    if (datum.kind() != DatumKind::G2) throw InputError("theorem A is about G2");
    const auto fan = make_weyl_fan(datum);
    const std::vector<Character> roots = {datum.character({1, -1, 0}), datum.character({2, -1, -1})};
    for (const auto& mu : g2_dominant_weights(datum, o.max_coord)) {
      const auto os = from_weyl_orbit(fan, mu);
      for (const auto& alpha : roots) {
        const auto rep = verify_projection_equality(os, LeviSpec::rank_one(datum, alpha));
        t.record(rep.equal && rep.routes_agree, "mu " + to_string(mu) + " alpha " + to_string(alpha),
                 "witnesses " + join(rep.witnesses));
      }
    }
    return t.finish("A");
  }
  if (o.theorem == "B") {
    const auto datum = parse_datum(o.datum.empty() ? "GL:4" : o.datum);
    if (datum.kind() == DatumKind::G2) throw InputError("theorem B is about GL_n");
    std::vector<std::vector<int>> all;
    if (o.batches.empty()) {
      all = batch_compositions(datum.n());
    } else {
      try {
        all = {LeviSpec::from_batches(datum, parse_int_list(o.batches)).batches};
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    const auto fan = make_weyl_fan(datum);
    for (std::int64_t i = 0; i < o.samples; ++i) {
      const auto seed = o.seed + static_cast<std::uint64_t>(i);
      const auto os = random_positive_orthogonal_set(fan, o.bound, seed);
      for (const auto& b : all) {
        const auto rep = verify_projection_equality(os, LeviSpec::from_batches(datum, b));
        std::string name;
        for (int x : b) name += (name.empty() ? "" : ",") + std::to_string(x);
        t.record(rep.equal && rep.routes_agree, "seed " + std::to_string(seed) + " batches " + name,
                 "witnesses " + join(rep.witnesses) + (rep.routes_agree ? "" : " (routes disagree)"));
      }
    }
    return t.finish("B");
  }
  if (o.theorem == "C") {
    const auto fan = make_weyl_fan(RootDatum::build(DatumKind::G2));
    for (char label : {'a', 'b', 'c', 'd'})
      for (std::int64_t n = 1; n <= o.n_max; ++n) {
        const auto c = g2_case(fan, label, n);
        const auto rep = phi_cokernel_dim(c.os, c.alpha);
        const auto pda = projected_h0_points(c.os, c.alpha);
        t.record(rep.coker_dim == 0 && pda.points == c.expected_divisor_points.points,
                 std::string("case ") + label + " n " + std::to_string(n), "missing " + join(rep.missing));
      }
    return t.finish("C");
  }
  if (o.theorem == "D") return verify_surjectivity(o, t, "GL:3", DatumKind::GL);
  if (o.theorem == "E") return verify_surjectivity(o, t, "SL:3", DatumKind::SL);
  throw InputError("unknown theorem '" + o.theorem + "' (expected A, B, C, D or E)");
}

void print_points(std::ostream& out, const std::string& label, const std::vector<Character>& pts) {
  out << label << " (" << pts.size() << "):\n";
  for (const auto& p : pts) out << "  " << to_string(p) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric varieties of Weyl fans: sections, H^1 of ideal twists, projection checks", "toricmazur"};
  app.require_subcommand(1);

  auto* fan_cmd = app.add_subcommand("fan", "Weyl fan data");
  fan_cmd->require_subcommand(1);
  auto* dump_cmd = fan_cmd->add_subcommand("dump", "rays, maximal cones and walls");
  std::string dump_datum;
  bool dump_json = false;
  dump_cmd->add_option("datum", dump_datum, "GL:n, SL:n or G2")->required();
  dump_cmd->add_flag("--json", dump_json);

  std::string datum, divisor_path, alpha_text, oracle;
  bool json = false;
  auto* h0_cmd = app.add_subcommand("h0", "lattice points P_D indexing H^0(V, O(D))");
  h0_cmd->add_option("--datum", datum);
  h0_cmd->add_option("--divisor", divisor_path)->required();
  h0_cmd->add_flag("--json", json);

  auto* h1_cmd = app.add_subcommand("h1", "cokernel of H^0(V, O(D)) -> H^0(D_alpha, O(D))");
  h1_cmd->add_option("--datum", datum);
  h1_cmd->add_option("--alpha", alpha_text)->required();
  h1_cmd->add_option("--divisor", divisor_path)->required();
  h1_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"topological"}));
  h1_cmd->add_flag("--json", json);

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "property sweeps for one theorem");
  verify_cmd->add_option("--theorem", vo.theorem)->required()->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
  verify_cmd->add_option("--datum", vo.datum);
  verify_cmd->add_option("--batches", vo.batches, "e.g. 2,2; default every ordered batching");
  verify_cmd->add_option("--samples", vo.samples)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", vo.seed);
  verify_cmd->add_option("--bound", vo.bound, "maximal wall increment")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--n-max", vo.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-coord", vo.max_coord)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", vo.json);

  auto* counter_cmd = app.add_subcommand("counterexample", "the G2 set where phi is not surjective");
  counter_cmd->add_flag("--json", json);

  std::string mu_text, g2_label;
  bool random_positive = false, random_valid = false;
  std::uint64_t seed = 1;
  std::int64_t bound = 5, range = 3, n = 1;
  auto* divisor_cmd = app.add_subcommand("divisor", "write a divisor file");
  divisor_cmd->add_option("--datum", datum)->required();
  auto* mu_opt = divisor_cmd->add_option("--mu", mu_text, "Weyl orbit of this weight");
  auto* pos_opt = divisor_cmd->add_flag("--random-positive", random_positive);
  auto* val_opt = divisor_cmd->add_flag("--random-valid", random_valid);
  auto* case_opt = divisor_cmd->add_option("--g2-case", g2_label)->check(CLI::IsMember({"a", "b", "c", "d"}));
  mu_opt->excludes(pos_opt)->excludes(val_opt)->excludes(case_opt);
  pos_opt->excludes(val_opt)->excludes(case_opt);
  val_opt->excludes(case_opt);
  divisor_cmd->add_option("--seed", seed);
  divisor_cmd->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
  divisor_cmd->add_option("--range", range)->check(CLI::NonNegativeNumber);
  divisor_cmd->add_option("--n", n)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dump_cmd->parsed()) {
      const auto fan = build_weyl_fan(parse_datum(dump_datum));
      if (dump_json) {
        out << to_json(fan).dump(2) << "\n";
      } else {
        out << fan.datum().name() << ": " << fan.rays().size() << " rays, " << fan.cones().size()
            << " maximal cones, " << fan.adjacency().size() << " walls\n";
        for (std::size_t r = 0; r < fan.rays().size(); ++r) out << "ray " << r << " " << to_string(fan.rays()[r]) << "\n";
        for (const auto& c : fan.cones()) {
          out << "cone " << c.id << ":";
          for (auto r : c.rays) out << " " << to_string(fan.rays()[r]);
          out << "\n";
        }
      }
      return 0;
    }
    if (h0_cmd->parsed()) {
      const auto os = load_divisor(divisor_path, datum);
      require_convex(os);
      const auto pts = h0_points(os);
      if (json) out << Json{{"datum", os.datum().name()}, {"h0_dim", pts.size()}, {"points", to_json(pts)}}.dump(2) << "\n";
      else print_points(out, "P_D", pts.points);
      return 0;
    }
    if (h1_cmd->parsed()) {
      const auto os = load_divisor(divisor_path, datum);
      require_convex(os);
      const auto alpha = parse_root(os.datum(), alpha_text);
      auto rep = phi_cokernel_dim(os, alpha);
      bool agrees = true;
      std::int64_t total = 0;
      if (!oracle.empty()) {
        rep.per_eigenweight = topological_h1(os, alpha);
        for (const auto& [u, h] : rep.per_eigenweight) total += h;
        agrees = total == static_cast<std::int64_t>(rep.coker_dim);
      }
      if (json) {
        Json j = to_json(rep);
        if (!oracle.empty()) j["oracle"] = {{"kind", oracle}, {"total", total}, {"agrees", agrees}};
        out << j.dump(2) << "\n";
      } else {
        out << "h0_dim " << rep.h0_dim << "\nh0_divisor_dim " << rep.h0_divisor_dim << "\ncoker_dim " << rep.coker_dim
            << "\n";
        print_points(out, "missing", rep.missing);
        if (!oracle.empty()) {
          out << "topological total " << total << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
          for (const auto& [u, h] : rep.per_eigenweight) out << "  weight " << to_string(u) << " h1 " << h << "\n";
        }
      }
      if (!agrees) err << "topological oracle disagrees with the cokernel dimension\n";
      return agrees ? 0 : 1;
    }
    if (verify_cmd->parsed()) return run_verify(vo, out);
    if (counter_cmd->parsed()) {
      const auto c = g2_counterexample();
      const auto pd = h0_points(c.os);
      const auto pda = projected_h0_points(c.os, c.alpha);
      if (json) {
        Json j = to_json(c.cohomology);
        j["divisor"] = to_json(c.os);
        j["alpha"] = to_json(c.alpha);
        j["P_D"] = to_json(pd);
        j["P_D_alpha"] = to_json(pda);
        j["projection"] = to_json(c.projection);
        out << j.dump(2) << "\n";
      } else {
        out << "alpha " << to_string(c.alpha) << "\n";
        print_points(out, "P_D", pd.points);
        print_points(out, "P_D_alpha", pda.points);
        out << "h0_dim " << c.cohomology.h0_dim << "\nh0_divisor_dim " << c.cohomology.h0_divisor_dim
            << "\ncoker_dim " << c.cohomology.coker_dim << "\n";
        print_points(out, "missing", c.cohomology.missing);
        out << "projection equality " << (c.projection.equal ? "holds" : "fails") << "\n";
      }
      return 0;
    }
    if (divisor_cmd->parsed()) {
      const auto d = parse_datum(datum);
      const auto fan = make_weyl_fan(d);
      std::optional<OrthogonalSet> os;
      if (!mu_text.empty()) {
        Character mu;
        try {
          mu = parse_character(d, mu_text);
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("bad weight: ") + e.what());
        }
        if (!d.in_character_lattice(mu)) throw InputError(to_string(mu) + " is not a character of " + d.name());
        os = from_weyl_orbit(fan, mu);
      } else if (random_positive) {
        os = random_positive_orthogonal_set(fan, bound, seed);
      } else if (random_valid) {
        os = random_valid_orthogonal_set(fan, range, seed);
      } else if (!g2_label.empty()) {
        if (d.kind() != DatumKind::G2) throw InputError("--g2-case needs --datum G2");
        os = g2_case(fan, g2_label[0], n).os;
      } else {
        throw InputError("choose one of --mu, --random-positive, --random-valid, --g2-case");
      }
      out << to_json(*os).dump(2) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace toric
