// Command-line front end: build states, evaluate measures and protocol
// fidelities, run sweeps, emit CSV tables.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "gcv/families.hpp"
#include "gcv/random_states.hpp"
#include "gcv/gvbs.hpp"
#include "gcv/json_io.hpp"
#include "gcv/multimode.hpp"
#include "gcv/protocols.hpp"
#include "gcv/relativistic.hpp"
#include "gcv/twomode.hpp"

namespace {

using namespace gcv;

struct Grid {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  double at(int i) const {
    if (steps <= 1) return start;
    return start + (stop - start) * i / (steps - 1.0);
  }
};

Grid parse_grid(const std::string& spec) {
  // name=start:stop:steps
  Grid g;
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw CLI::ValidationError("grid", spec);
  g.name = spec.substr(0, eq);
  const std::string rest = spec.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("grid", spec);
  g.start = std::stod(rest.substr(0, c1));
  g.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
  g.steps = std::stoi(rest.substr(c2 + 1));
  if (g.steps < 1) throw CLI::ValidationError("grid", "steps >= 1");
  return g;
}

std::vector<int> parse_split(const std::string& spec) {
  std::vector<int> out;
  std::string tok;
  std::istringstream ss(spec);
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GCV_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

void emit(const io::CsvWriter& csv, const std::string& out_path) {
  if (out_path.empty())
    std::cout << csv.text();
  else
    csv.write(out_path);
}

int run_state(const std::string& family, double a, double n, double s,
              double t, double a1, double a2, double a3, double mu1,
              double mu2, double mu, double r, double m, int n_modes,
              double b, const std::string& recipe_file,
              const std::string& out_path, bool check) {
  Mat sigma;
  if (family == "ghzw") {
    sigma = families::cm_of(families::Ghzw{a});
  } else if (family == "tstate") {
    sigma = families::cm_of(families::TState{a});
  } else if (family == "noisyghzw") {
    sigma = families::cm_of(families::NoisyGhzw{n, s});
  } else if (family == "bassethound") {
    sigma = families::cm_of(families::BassetHound{a});
  } else if (family == "pure3") {
    sigma = families::cm_of(families::PureThreeMode{a1, a2, a3});
  } else if (family == "fourmode") {
    sigma = families::cm_of(families::FourMode{s, a});
  } else if (family == "tms") {
    sigma = two_mode_squeezed_cm(r);
  } else if (family == "fsym") {
    sigma = multimode::fully_symmetric_cm(
        multimode::fully_symmetric_pure(n_modes, b));
  } else if (family == "gmems") {
    sigma = twomode::make_extremal(twomode::ExtremalKind::GMEMS, mu1, mu2, mu).cm();
  } else if (family == "glems") {
    sigma = twomode::make_extremal(twomode::ExtremalKind::GLEMS, mu1, mu2, mu).cm();
  } else if (family == "allotment") {
    sigma = families::allotment(m, s, t);
  } else if (family == "recipe") {
    const auto recipe = io::recipe_from_json(io::read_file(recipe_file));
    sigma = optics::apply(Mat::Identity(2 * n_modes, 2 * n_modes), recipe);
  } else {
    std::cerr << "unknown family " << family << "\n";
    return 2;
  }
  if (check && !check_physical(sigma)) {
    std::cerr << "state failed the physicality check\n";
    return 2;
  }
  const std::string text = io::cm_to_json(sigma);
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
  return 0;
}

int run_measure(const std::string& in_path, const std::string& measure,
                const std::string& split_spec, double p, bool as_json,
                bool check) {
  const Mat sigma = io::cm_from_json(io::read_file(in_path));
  if (check && !check_physical(sigma)) {
    std::cerr << "input CM is unphysical\n";
    return 2;
  }
  std::vector<int> split = split_spec.empty() ? std::vector<int>{0}
                                              : parse_split(split_spec);
  std::vector<std::pair<std::string, double>> results;
  if (measure == "logneg") {
    results = {{"logneg", twomode::log_negativity(sigma, split)}};
  } else if (measure == "neg") {
    results = {{"neg", twomode::negativity(sigma, split)}};
  } else if (measure == "eof") {
    const auto sf = twomode::to_standard_form(sigma).sf;
    results = {{"eof", twomode::eof_symmetric(sf)}};
  } else if (measure == "gem") {
    const auto em = twomode::gaussian_em(sigma);
    results = {{"g_tau", em.g_tau}, {"g_eof", em.g_eof}, {"m_opt", em.m_opt}};
  } else if (measure == "contangle") {
    if (mode_count(sigma) != 2) {
      results = {{"contangle", multimode::contangle_pure_1n(sigma, split[0])}};
    } else {
      results = {{"contangle", multimode::gaussian_contangle(sigma)}};
    }
  } else if (measure == "tangle") {
    results = {{"tangle", multimode::gaussian_tangle(sigma)}};
  } else if (measure == "residual") {
    if (pure_state_conditions(sigma, 1e-6))
      results = {{"residual", multimode::residual_contangle_3mode_pure(sigma)}};
    else
      results = {{"residual",
                  multimode::residual_contangle_3mode_symmetric(sigma)}};
  } else if (measure == "mutualinfo") {
    results = {{"mutualinfo", mutual_information(sigma, split)}};
  } else if (measure == "purity") {
    results = {{"purity", purity(sigma)}};
  } else if (measure == "vn") {
    results = {{"vn_entropy", von_neumann_entropy(sigma)}};
  } else if (measure == "renyi") {
    results = {{"s_p", generalized_entropy(sigma, p)}};
  } else {
    std::cerr << "unknown measure " << measure << "\n";
    return 2;
  }
  if (as_json) {
    std::string out = "{";
    for (size_t i = 0; i < results.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + results[i].first + "\": " + io::format_value(results[i].second);
    }
    std::cout << out << "}\n";
  } else {
    for (const auto& [name, value] : results)
      std::cout << name << " " << io::format_value(value) << "\n";
  }
  return 0;
}

int run_sweep(const std::string& op, const std::vector<std::string>& grid_specs,
              int samples, std::uint64_t seed, const std::string& out_path) {
  if (op == "em-bounds-scan") {
    // random entangled two-mode states against the EM-vs-negativity bounds;
    // the conjectured upper bound is reported, never asserted
    StateSampler sampler(seed);
    io::CsvWriter csv({"index", "nu_tilde", "g_eof", "lower_bound",
                       "upper_conjectured", "below_lower", "above_upper"});
    int found = 0, index = 0;
    while (found < samples && index < 1000 * samples) {
      ++index;
      const Mat sigma = sampler.random_physical_cm(2);
      const auto sf = twomode::to_standard_form(sigma).sf;
      const double nt = twomode::tilde_nu_minus(sf);
      if (nt >= 1.0 - 1e-9) continue;
      ++found;
      const auto em = twomode::gaussian_em(sf);
      const auto bounds = twomode::em_vs_negativity_bounds(nt);
      csv.add_row({static_cast<double>(found), nt, em.g_eof, bounds.lower,
                   bounds.upper_conjectured,
                   em.g_eof < bounds.lower - 1e-9 ? 1.0 : 0.0,
                   em.g_eof > bounds.upper_conjectured + 1e-9 ? 1.0 : 0.0});
    }
    emit(csv, out_path);
    return 0;
  }
  std::vector<Grid> grids;
  for (const auto& s : grid_specs) grids.push_back(parse_grid(s));
  if (grids.empty()) {
    std::cerr << "sweep: at least one --grid required\n";
    return 2;
  }
  auto value_of = [&](const std::vector<double>& point,
                      const std::string& name) {
    for (size_t i = 0; i < grids.size(); ++i)
      if (grids[i].name == name) return point[i];
    throw std::invalid_argument("sweep op needs grid " + name);
  };
  std::vector<std::string> header;
  for (const auto& g : grids) header.push_back(g.name);

  std::function<std::vector<double>(const std::vector<double>&)> eval;
  if (op == "ghzw-residual") {
    header.push_back("residual");
    eval = [&](const std::vector<double>& pt) {
      return std::vector<double>{
          families::residual_contangle_of(families::Ghzw{value_of(pt, "a")})};
    };
  } else if (op == "tstate-residual") {
    header.push_back("residual");
    eval = [&](const std::vector<double>& pt) {
      return std::vector<double>{
          families::residual_contangle_of(families::TState{value_of(pt, "a")})};
    };
  } else if (op == "bassethound-residual") {
    header.push_back("residual");
    eval = [&](const std::vector<double>& pt) {
      return std::vector<double>{families::residual_contangle_of(
          families::BassetHound{value_of(pt, "a")})};
    };
  } else if (op == "fourmode") {
    header.insert(header.end(), {"g12", "residual", "tripartite_bound"});
    eval = [&](const std::vector<double>& pt) {
      const auto rep = multimode::four_mode_analysis(value_of(pt, "s"),
                                                     value_of(pt, "a"));
      return std::vector<double>{rep.g_12, rep.residual, rep.tripartite_bound};
    };
  } else if (op == "tms-logneg") {
    header.push_back("logneg");
    eval = [&](const std::vector<double>& pt) {
      return std::vector<double>{
          twomode::log_negativity(two_mode_squeezed_cm(value_of(pt, "r")))};
    };
  } else if (op == "gem-closed") {
    header.insert(header.end(), {"m2_glems", "m2_gmems"});
    eval = [&](const std::vector<double>& pt) {
      const double s = value_of(pt, "s"), d = value_of(pt, "d"),
                   g = value_of(pt, "g");
      return std::vector<double>{twomode::m2_opt_glems(s, d, g),
                                 twomode::m2_opt_gmems(s, d, g)};
    };
  } else {
    std::cerr << "unknown sweep op " << op << "\n";
    return 2;
  }

  io::CsvWriter csv(header);
  std::vector<int> idx(grids.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<double> pt;
    for (size_t i = 0; i < grids.size(); ++i) pt.push_back(grids[i].at(idx[i]));
    std::vector<double> row = pt;
    for (double v : eval(pt)) row.push_back(v);
    csv.add_row(row);
    // advance the multi-index, last grid fastest
    done = true;
    for (int i = static_cast<int>(grids.size()) - 1; i >= 0; --i) {
      if (++idx[i] < grids[i].steps) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }
  emit(csv, out_path);
  return 0;
}

int run_protocol(const std::string& kind, int n_parties, double n1, double n2,
                 const Grid& rbar_grid, const Grid& a_grid, double t,
                 const std::string& out_path) {
  if (kind == "teleport") {
    io::CsvWriter csv({"protocol", "n1", "n2", "rbar", "d_opt", "F",
                       "nonclassical"});
    for (int i = 0; i < rbar_grid.steps; ++i) {
      const double rbar = rbar_grid.at(i);
      const auto opt = protocols::optimal_two_party(n1, n2, rbar);
      csv.add_row_mixed({"teleport", io::format_value(n1), io::format_value(n2),
                         io::format_value(rbar), io::format_value(opt.d_opt),
                         io::format_value(opt.f_opt),
                         opt.f_opt > 0.5 ? "1" : "0"});
    }
    emit(csv, out_path);
    return 0;
  }
  if (kind == "network") {
    io::CsvWriter csv({"protocol", "N", "n1", "n2", "rbar", "g_opt", "d_opt",
                       "F", "E_T", "EF_loc", "nonclassical"});
    for (int i = 0; i < rbar_grid.steps; ++i) {
      const double rbar = rbar_grid.at(i);
      const auto opt = protocols::network_optimal(n_parties, n1, n2, rbar);
      csv.add_row_mixed(
          {"network", std::to_string(n_parties), io::format_value(n1),
           io::format_value(n2), io::format_value(rbar),
           io::format_value(opt.g_opt), io::format_value(opt.d_opt),
           io::format_value(opt.f_opt), io::format_value(opt.e_t),
           io::format_value(opt.e_f_loc), opt.f_opt > 0.5 ? "1" : "0"});
    }
    emit(csv, out_path);
    return 0;
  }
  if (kind == "telecloning-sym") {
    io::CsvWriter csv({"protocol", "a", "F", "nonclassical"});
    for (int i = 0; i < a_grid.steps; ++i) {
      const double a = a_grid.at(i);
      const double f = protocols::telecloning_symmetric(a);
      csv.add_row_mixed({"telecloning-sym", io::format_value(a),
                         io::format_value(f), f > 0.5 ? "1" : "0"});
    }
    emit(csv, out_path);
    return 0;
  }
  if (kind == "telecloning-asym") {
    io::CsvWriter csv({"protocol", "a", "t", "F_bob", "F_claire"});
    for (int i = 0; i < a_grid.steps; ++i) {
      const double a = a_grid.at(i);
      const auto f = protocols::telecloning_asymmetric(a, t);
      csv.add_row_mixed({"telecloning-asym", io::format_value(a),
                         io::format_value(t), io::format_value(f.f_bob),
                         io::format_value(f.f_claire)});
    }
    emit(csv, out_path);
    return 0;
  }
  if (kind == "ghzw-variants") {
    io::CsvWriter csv({"protocol", "rbar", "F3_opt", "F2_red", "F2_uni"});
    for (int i = 0; i < rbar_grid.steps; ++i) {
      const double rbar = rbar_grid.at(i);
      const auto v = protocols::ghzw_two_party_variants(rbar);
      const auto net = protocols::network_optimal(3, 1.0, 1.0, rbar);
      csv.add_row_mixed({"ghzw-variants", io::format_value(rbar),
                         io::format_value(net.f_opt), io::format_value(v.f2_red),
                         io::format_value(v.f2_uni)});
    }
    emit(csv, out_path);
    return 0;
  }
  std::cerr << "unknown protocol kind " << kind << "\n";
  return 2;
}

int run_gvbs(int n_sites, const Grid& x_grid, double s, double r_bond,
             bool use_finite_bond, bool thresholds_mode,
             const std::string& out_path) {
  std::optional<double> rb;
  if (use_finite_bond) rb = r_bond;
  if (thresholds_mode) {
    io::CsvWriter csv({"x", "k", "s_k"});
    for (int i = 0; i < x_grid.steps; ++i) {
      const double x = x_grid.at(i);
      const auto th = gvbs::thresholds(n_sites, x, rb);
      for (size_t k = 0; k < th.size(); ++k)
        csv.add_row({x, static_cast<double>(k + 1), th[k]});
    }
    emit(csv, out_path);
    return 0;
  }
  io::CsvWriter csv({"x", "s", "k", "nu_tilde", "E_N"});
  for (int i = 0; i < x_grid.steps; ++i) {
    const double x = x_grid.at(i);
    const double s_used = std::max(s, gvbs::BuildingBlock::s_min(x));
    const Mat cm = gvbs::construct({n_sites, {x, s_used}, rb});
    for (int k = 1; k <= n_sites / 2; ++k) {
      const double nt = gvbs::pair_nu_tilde(cm, k);
      csv.add_row({x, s_used, static_cast<double>(k), nt,
                   nt < 1.0 ? -std::log(nt) : 0.0});
    }
  }
  emit(csv, out_path);
  return 0;
}

int run_unruh(const std::string& mode, const Grid& s_grid, const Grid& r_grid,
              double abar, const Grid& freq_grid, const std::string& out_path) {
  if (mode == "one") {
    io::CsvWriter csv({"s", "r", "G_ar", "G_r_antir", "residual", "mutualinfo"});
    for (int i = 0; i < s_grid.steps; ++i) {
      for (int j = 0; j < r_grid.steps; ++j) {
        const auto rep =
            relativistic::one_observer_report(s_grid.at(i), r_grid.at(j));
        csv.add_row({s_grid.at(i), r_grid.at(j), rep.g_ar, rep.g_r_rr,
                     rep.residual, rep.mutual_info});
      }
    }
    emit(csv, out_path);
    return 0;
  }
  if (mode == "two") {
    io::CsvWriter csv(
        {"s", "a", "G_ln", "residual", "mutualinfo", "defect", "a_star"});
    for (int i = 0; i < s_grid.steps; ++i) {
      for (int j = 0; j < r_grid.steps; ++j) {
        const double s = s_grid.at(i), a = r_grid.at(j);
        const auto rep = relativistic::two_observer_report(s, a, a);
        csv.add_row({s, a, rep.g_ln, rep.residual, rep.mutual_info,
                     relativistic::information_defect(a, s),
                     relativistic::disentangling_acceleration(s)});
      }
    }
    emit(csv, out_path);
    return 0;
  }
  if (mode == "window") {
    io::CsvWriter csv({"lambda", "nu", "entangled", "G_tau"});
    for (int i = 0; i < freq_grid.steps; ++i) {
      for (int j = 0; j < freq_grid.steps; ++j) {
        const auto win = relativistic::entangled_frequency_window(
            abar, freq_grid.at(i), freq_grid.at(j));
        csv.add_row({freq_grid.at(i), freq_grid.at(j),
                     win.entangled ? 1.0 : 0.0, win.g_tau});
      }
    }
    emit(csv, out_path);
    return 0;
  }
  std::cerr << "unknown unruh mode " << mode << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-state covariance toolkit"};
  app.require_subcommand(1);

  // state
  auto* state = app.add_subcommand("state", "build a state, write CM JSON");
  std::string family, recipe_file, out_path, in_path, measure_name, split_spec;
  double a = 2.0, nthermal = 1.0, s = 1.0, t = 0.5, a1 = 2.0, a2 = 2.0,
         a3 = 2.0, mu1 = 0.5, mu2 = 0.5, mu = 0.7, r = 1.0, m = 2.0, b = 1.5,
         p = 2.0;
  int n_modes = 3;
  bool check = false, as_json = false;
  state->add_option("--family,--recipe", family, "family or recipe name")
      ->required();
  state->add_option("--a", a);
  state->add_option("--n", nthermal);
  state->add_option("--s", s);
  state->add_option("--t", t);
  state->add_option("--a1", a1);
  state->add_option("--a2", a2);
  state->add_option("--a3", a3);
  state->add_option("--mu1", mu1);
  state->add_option("--mu2", mu2);
  state->add_option("--mu", mu);
  state->add_option("--r", r);
  state->add_option("--m", m);
  state->add_option("--b", b);
  state->add_option("--N,--n-modes", n_modes);
  state->add_option("--recipe-file", recipe_file);
  state->add_option("--out", out_path);
  state->add_flag("--check", check);

  // measure
  auto* meas = app.add_subcommand("measure", "evaluate a measure on a CM file");
  meas->add_option("--in", in_path)->required();
  meas->add_option("--measure", measure_name)->required();
  meas->add_option("--split", split_spec);
  meas->add_option("--p", p);
  meas->add_flag("--json", as_json);
  meas->add_flag("--check", check);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid sweep of an operation");
  std::string sweep_op;
  std::vector<std::string> grid_specs;
  int samples = 1000;
  std::uint64_t seed = default_seed();
  sweep->add_option("--op", sweep_op)->required();
  sweep->add_option("--grid", grid_specs);
  sweep->add_option("--samples", samples);
  sweep->add_option("--seed", seed);
  sweep->add_option("--out", out_path);

  // protocol
  auto* proto = app.add_subcommand("protocol", "communication fidelities");
  std::string proto_kind;
  int n_parties = 3;
  double n1 = 1.0, n2 = 1.0;
  std::string rbar_spec = "rbar=0:2:21", a_spec = "a=1:6:26";
  proto->add_option("--kind", proto_kind)->required();
  proto->add_option("--N", n_parties);
  proto->add_option("--n1", n1);
  proto->add_option("--n2", n2);
  proto->add_option("--rbar-grid", rbar_spec);
  proto->add_option("--a-grid", a_spec);
  proto->add_option("--t", t);
  proto->add_option("--out", out_path);

  // gvbs
  auto* vb = app.add_subcommand("gvbs", "valence bond states on a ring");
  int n_sites = 6;
  std::string x_spec = "x=1.05:3:20";
  double r_bond = 1.1, s_gvbs = 2.0;
  bool finite_bond = false, thresholds_mode = false;
  vb->add_option("--N", n_sites);
  vb->add_option("--x-grid", x_spec);
  vb->add_option("--s", s_gvbs);
  vb->add_option("--rbond", r_bond);
  vb->add_flag("--finite-bond", finite_bond);
  vb->add_flag("--thresholds", thresholds_mode);
  vb->add_option("--out", out_path);

  // unruh
  auto* un = app.add_subcommand("unruh", "non-inertial frame sweeps");
  std::string unruh_mode = "one";
  std::string s_spec = "s=0.2:2:10", r_spec = "r=0:3:16",
              freq_spec = "f=0.5:5:10";
  double abar = 2.0 * M_PI;
  un->add_option("--mode", unruh_mode);
  un->add_option("--s-grid", s_spec);
  un->add_option("--r-grid", r_spec);
  un->add_option("--abar", abar);
  un->add_option("--freq-grid", freq_spec);
  un->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*state)
      return run_state(family, a, nthermal, s, t, a1, a2, a3, mu1, mu2, mu, r,
                       m, n_modes, b, recipe_file, out_path, check);
    if (*meas)
      return run_measure(in_path, measure_name, split_spec, p, as_json, check);
    if (*sweep) return run_sweep(sweep_op, grid_specs, samples, seed, out_path);
    if (*proto)
      return run_protocol(proto_kind, n_parties, n1, n2, parse_grid(rbar_spec),
                          parse_grid(a_spec), t, out_path);
    if (*vb)
      return run_gvbs(n_sites, parse_grid(x_spec), s_gvbs, r_bond, finite_bond,
                      thresholds_mode, out_path);
    if (*un)
      return run_unruh(unruh_mode, parse_grid(s_spec), parse_grid(r_spec),
                       abar, parse_grid(freq_spec), out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
