#include "lmgcli/app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "lmg/lmg.hpp"
#include "lmgcli/output.hpp"

namespace lmgcli {
namespace {

namespace fs = std::filesystem;

struct Options {
  double n = 2;
  double t_hot = 0.6;
  double t_cold = 0.3;
  double lambda1 = 0.5;
  double lambda2 = 4.0;
  double lambda = 0.5;
  double temperature = 0.3;
  std::string backend = "exact";
  double grid = 0;
  std::string figure;
  std::string out;
  std::string format = "csv";
  std::string figures_format = "both";
  bool populations = false;
};

int spin_count(double n) {
  if (!std::isfinite(n) || n < 1 || n != std::floor(n) || n > 1e9) {
    throw lmg::DomainError("--n must be an integer >= 1, got " + format_number(n));
  }
  return static_cast<int>(n);
}

std::size_t grid_count(double g) {
  if (g == 0) return 0;
  if (!std::isfinite(g) || g < 1 || g != std::floor(g) || g > 1e8) {
    throw lmg::DomainError("--grid must be an integer >= 1, got " + format_number(g));
  }
  return static_cast<std::size_t>(g);
}

struct FormatChoice {
  bool csv;
  bool svg;
};

FormatChoice parse_format(const std::string& f) {
  if (f == "csv") return {true, false};
  if (f == "svg") return {false, true};
  if (f == "both") return {true, true};
  throw lmg::DomainError("--format must be csv, svg or both, got '" + f + "'");
}

lmg::CycleSpec cycle_from(const Options& o) {
  lmg::CycleSpec c;
  c.n = spin_count(o.n);
  c.t_hot = o.t_hot;
  c.t_cold = o.t_cold;
  c.lambda1 = o.lambda1;
  c.lambda2 = o.lambda2;
  c.backend = lmg::parse_backend(o.backend);
  return c;
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_atomic(out_path, text);
  }
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const lmg::ModelSpec spec{spin_count(o.n), o.lambda};
  spec.validate();
  const auto ground = lmg::ground_set(spec);
  std::string text = "twice_m,m,energy,ground\n";
  for (const auto& level : lmg::spectrum(spec)) {
    const bool g = std::find(ground.begin(), ground.end(), level.m) != ground.end();
    text += std::to_string(level.m.twice_m()) + ',' + format_number(level.m.value()) + ',' +
            format_number(level.energy) + ',' + (g ? "1" : "0") + '\n';
  }
  emit(out, o.out, text);
  return kOk;
}

int cmd_thermal(const Options& o, std::ostream& out) {
  const lmg::ModelSpec spec{spin_count(o.n), o.lambda};
  spec.validate();
  const auto backend = lmg::parse_backend(o.backend);
  const lmg::ThermalState s = backend == lmg::Backend::exact
                                  ? lmg::thermal_state(spec, o.temperature)
                                  : lmg::asymptotic_thermal_state(spec, o.temperature);
  std::string text = "n,lambda,temperature,log_z,internal_energy,entropy\n";
  text += std::to_string(spec.n) + ',' + format_number(spec.lambda) + ',' +
          format_number(o.temperature) + ',' + format_number(s.log_z) + ',' +
          format_number(s.internal_energy) + ',' + format_number(s.entropy) + '\n';
  if (o.populations && !s.populations.empty()) {
    text += "\ntwice_m,population\n";
    for (std::size_t k = 0; k < s.populations.size(); ++k) {
      text += std::to_string(-spec.n + 2 * static_cast<int>(k)) + ',' +
              format_number(s.populations[k]) + '\n';
    }
  }
  emit(out, o.out, text);
  return kOk;
}

int cmd_cycle(const Options& o, std::ostream& out) {
  const lmg::CycleSpec c = cycle_from(o);
  c.validate();
  const auto r = lmg::run_cycle(c);
  std::string text(kSweepHeader);
  text += '\n';
  text += sweep_row(lmg::SweepRecord::from(c.lambda1, r));
  text += '\n';
  emit(out, o.out, text);
  return kOk;
}

void write_artifacts(const std::vector<Artifact>& artifacts, const fs::path& dir) {
  for (const auto& a : artifacts) write_atomic(dir / a.name, a.contents);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const FormatChoice fmt = parse_format(o.format);
  const std::size_t points = grid_count(o.grid);

  FigureDef fig;
  if (!o.figure.empty()) {
    auto found = find_figure(o.figure);
    if (!found) throw lmg::DomainError("unknown figure '" + o.figure + "'");
    if (found->kind != FigureKind::efficiency) {
      throw lmg::DomainError("figure " + o.figure +
                             " is not an efficiency sweep; use the figures command");
    }
    fig = *found;
  } else {
    lmg::CycleSpec c = cycle_from(o);
    c.lambda1 = 0.0;
    c.validate();
    fig = {"sweep", FigureKind::efficiency, {{"", c}}, c.lambda2, 401, "lambda1 sweep"};
  }

  if (o.out.empty()) {
    if (fmt.svg) throw lmg::DomainError("--format svg/both needs --out");
    auto artifacts = render_figure(fig, points, true, false);
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
      if (i) out << '\n';
      out << artifacts[i].contents;
    }
    return kOk;
  }

  // Single-curve CSV goes to --out verbatim; extra curves and the SVG take
  // the --out stem plus their suffix.
  const fs::path target(o.out);
  const auto artifacts = render_figure(fig, points, fmt.csv, fmt.svg);
  std::size_t csv_count = 0;
  for (const auto& a : artifacts) csv_count += a.kind == ArtifactKind::csv;
  for (const auto& a : artifacts) {
    fs::path dest = target;
    if (a.kind == ArtifactKind::csv) {
      if (csv_count > 1) dest.replace_filename(target.stem().string() + a.suffix + ".csv");
    } else if (fmt.csv) {
      dest.replace_extension(".svg");
    }
    write_atomic(dest, a.contents);
  }
  return kOk;
}

int cmd_figures(const Options& o, std::ostream& out) {
  const FormatChoice fmt = parse_format(o.figures_format);
  const std::size_t points = grid_count(o.grid);
  const fs::path dir = o.out.empty() ? fs::path("figures") : fs::path(o.out);

  std::vector<FigureDef> selected;
  if (!o.figure.empty()) {
    auto found = find_figure(o.figure);
    if (!found) throw lmg::DomainError("unknown figure '" + o.figure + "'");
    selected.push_back(*found);
  } else {
    selected = figure_catalog();
  }
  for (const auto& fig : selected) {
    const auto artifacts = render_figure(fig, points, fmt.csv, fmt.svg);
    write_artifacts(artifacts, dir);
    for (const auto& a : artifacts) out << (dir / a.name).string() << '\n';
  }
  return kOk;
}

int cmd_validate(std::ostream& out) {
  constexpr int kMaxN = 8;
  constexpr int kLambdaPoints = 25;
  constexpr double kTolerance = 1e-9;
  bool ok = true;
  for (int n = 1; n <= kMaxN; ++n) {
    double worst = 0.0;
    for (double lambda : lmg::uniform_grid(0.0, 4.0, kLambdaPoints)) {
      const lmg::ModelSpec spec{n, lambda};
      const auto oracle = lmg::bruteforce_spectrum(spec);
      for (const auto& level : lmg::spectrum(spec)) {
        auto it = std::lower_bound(oracle.begin(), oracle.end(), level.energy);
        double best = std::numeric_limits<double>::infinity();
        if (it != oracle.end()) best = std::abs(*it - level.energy);
        if (it != oracle.begin()) best = std::min(best, std::abs(*std::prev(it) - level.energy));
        worst = std::max(worst, best);
      }
    }
    const bool pass = worst <= kTolerance;
    ok = ok && pass;
    out << "N=" << n << " levels checked over " << kLambdaPoints
        << " fields, max deviation " << format_number(worst) << (pass ? " ok" : " FAIL") << '\n';
  }
  out << (ok ? "validate: all J = N/2 levels found in the many-body spectrum\n"
             : "validate: FAILED\n");
  return ok ? kOk : kDomainError;
}

}  // namespace

std::vector<Artifact> render_figure(const FigureDef& fig, std::size_t points, bool with_csv,
                                    bool with_svg) {
  const std::size_t count = points == 0 ? fig.default_points : points;
  const std::string stem = "fig" + fig.id;
  std::vector<Artifact> artifacts;
  std::vector<Series> series;
  std::string y_label = "efficiency";

  switch (fig.kind) {
    case FigureKind::efficiency: {
      const char* colors[] = {"#1f4e9c", "#222222", "#2a8c3a"};
      std::size_t ci = 0;
      double eta_c = 0.0;
      std::vector<double> grid_for_carnot;
      for (const auto& curve : fig.curves) {
        lmg::SweepSpec s{curve.cycle, lmg::uniform_grid(0.0, fig.lambda1_max, count)};
        const auto records = lmg::sweep_lambda1(s);
        if (with_csv) {
          artifacts.push_back({stem + curve.suffix + ".csv", curve.suffix, ArtifactKind::csv,
                               sweep_csv(records)});
        }
        Series line{"eta, T_H=" + format_number(curve.cycle.t_hot), {}, {}, colors[ci++ % 3]};
        for (const auto& r : records) {
          line.x.push_back(r.lambda1);
          line.y.push_back(r.efficiency);
        }
        eta_c = records.front().eta_carnot;
        grid_for_carnot = line.x;
        series.push_back(std::move(line));
      }
      if (fig.id == "6" && with_csv) {
        const double ec = eta_c;
        std::vector<std::vector<double>> rows;
        for (double l : grid_for_carnot) {
          rows.push_back({l, lmg::high_t_efficiency(l / fig.lambda1_max, ec), ec / (1.0 + ec)});
        }
        artifacts.push_back({stem + "_high_t_formula.csv", "_high_t_formula", ArtifactKind::csv,
                             csv_table({"lambda1", "eta_high_t", "eta_zero"}, rows)});
      }
      series.push_back({"Carnot", {0.0, fig.lambda1_max}, {eta_c, eta_c}, "#c0392b", true});
      break;
    }
    case FigureKind::entropy: {
      const auto& c = fig.curves.front().cycle;
      const auto grid = lmg::uniform_grid(0.0, fig.lambda1_max, count);
      std::vector<std::vector<double>> rows;
      Series hot{"S, T=" + format_number(c.t_hot), {}, {}, "#c0392b"};
      Series cold{"S, T=" + format_number(c.t_cold), {}, {}, "#1f4e9c"};
      Series zero{"S, T=0", {}, {}, "#222222", true};
      for (double l : grid) {
        const lmg::ModelSpec m{c.n, l};
        const double sh = lmg::thermal_state(m, c.t_hot).entropy;
        const double sc = lmg::thermal_state(m, c.t_cold).entropy;
        const double sz = lmg::thermal_state(m, 0.0).entropy;
        rows.push_back({l, sh, sc, sz});
        for (auto* s : {&hot, &cold, &zero}) s->x.push_back(l);
        hot.y.push_back(sh);
        cold.y.push_back(sc);
        zero.y.push_back(sz);
      }
      if (with_csv) {
        artifacts.push_back({stem + ".csv", "", ArtifactKind::csv,
                             csv_table({"lambda1", "s_hot", "s_cold", "s_zero"}, rows)});
      }
      series = {hot, cold, zero};
      y_label = "entropy";
      break;
    }
    case FigureKind::derivative: {
      const auto& c = fig.curves.front().cycle;
      lmg::SweepSpec s{c, lmg::uniform_grid(0.0, fig.lambda1_max, count)};
      const auto records = lmg::sweep_lambda1(s);
      const auto slope = lmg::derivative_profile(s);
      std::vector<std::vector<double>> rows;
      Series line{"d eta / d lambda1", {}, {}, "#1f4e9c"};
      for (std::size_t i = 0; i < records.size(); ++i) {
        rows.push_back({records[i].lambda1, records[i].efficiency, slope[i]});
        line.x.push_back(records[i].lambda1);
        line.y.push_back(slope[i]);
      }
      if (with_csv) {
        artifacts.push_back({stem + ".csv", "", ArtifactKind::csv,
                             csv_table({"lambda1", "eta", "deta_dlambda1"}, rows)});
      }
      series = {line, {"0", {0.0, fig.lambda1_max}, {0.0, 0.0}, "#888888", true}};
      y_label = "d eta / d lambda1";
      break;
    }
  }

  if (with_svg) {
    artifacts.push_back({stem + ".svg", "", ArtifactKind::svg,
                         line_plot_svg("panel " + fig.id + ": " + fig.caption, "lambda1", y_label,
                                       series)});
  }
  return artifacts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermodynamics and heat-engine cycles of the Lipkin-Meshkov-Glick model", "lmg"};
  app.require_subcommand(1);
  Options o;

  auto add_cycle_flags = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of spins N");
    sub->add_option("--t-hot", o.t_hot, "hot bath temperature T_H");
    sub->add_option("--t-cold", o.t_cold, "cold bath temperature T_C");
    sub->add_option("--lambda2", o.lambda2, "field of the D->A stroke");
    sub->add_option("--backend", o.backend, "exact | asymptotic");
    sub->add_option("--out", o.out, "output file (default: standard output)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "levels E(M) of the J = N/2 sector");
  spectrum->add_option("--n", o.n, "number of spins N");
  spectrum->add_option("--lambda", o.lambda, "external field");
  spectrum->add_option("--out", o.out, "output file");

  auto* thermal = app.add_subcommand("thermal", "canonical state at one (N, lambda, T)");
  thermal->add_option("--n", o.n, "number of spins N");
  thermal->add_option("--lambda", o.lambda, "external field");
  thermal->add_option("--temperature", o.temperature, "bath temperature (0 allowed)");
  thermal->add_option("--backend", o.backend, "exact | asymptotic");
  thermal->add_flag("--populations", o.populations, "also print the level populations");
  thermal->add_option("--out", o.out, "output file");

  auto* cycle = app.add_subcommand("cycle", "one four-stroke cycle, printed as a CSV row");
  add_cycle_flags(cycle);
  cycle->add_option("--lambda1", o.lambda1, "field of the B->C stroke");

  auto* sweep = app.add_subcommand("sweep", "efficiency over a lambda1 grid");
  add_cycle_flags(sweep);
  sweep->add_option("--grid", o.grid, "number of grid points");
  sweep->add_option("--figure", o.figure, "use the parameters of a figure panel (e.g. 4a)");
  sweep->add_option("--format", o.format, "csv | svg | both");

  auto* figures = app.add_subcommand("figures", "regenerate every figure dataset");
  figures->add_option("--out", o.out, "output directory (default: figures)");
  figures->add_option("--figure", o.figure, "only this panel");
  figures->add_option("--grid", o.grid, "override the per-panel point count");
  figures->add_option("--format", o.figures_format, "csv | svg | both (default both)");

  auto* validate = app.add_subcommand("validate", "compare E(M) against the 2^N many-body spectrum");

  std::vector<const char*> argv{"lmg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, out);
    if (*thermal) return cmd_thermal(o, out);
    if (*cycle) return cmd_cycle(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*figures) return cmd_figures(o, out);
    if (*validate) return cmd_validate(out);
  } catch (const lmg::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace lmgcli
