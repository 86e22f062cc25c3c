#include "lmgcli/figures.hpp"

#include <algorithm>

namespace lmgcli {
namespace {

lmg::CycleSpec cycle(int n, double t_hot, double t_cold, double lambda2) {
  lmg::CycleSpec c;
  c.n = n;
  c.t_hot = t_hot;
  c.t_cold = t_cold;
  c.lambda1 = 0.0;
  c.lambda2 = lambda2;
  return c;
}

// 200 points per unit of lambda1, never fewer than 400.
std::size_t dense(double lambda_max) {
  return std::max<std::size_t>(400, static_cast<std::size_t>(200.0 * lambda_max) + 1);
}

std::vector<FigureDef> build() {
  using K = FigureKind;
  std::vector<FigureDef> f;
  // Panel 2: eta_C = 0.5 for both hot baths, so T_C = T_H / 2.
  f.push_back({"2a", K::efficiency,
               {{"_th0.8", cycle(20, 0.8, 0.4, 4.0)}, {"_th80", cycle(20, 80.0, 40.0, 4.0)}},
               4.0, dense(4.0), "N=20, T_H in {0.8, 80}, T_C = T_H/2, lambda2 = 4"});
  f.push_back({"2b", K::efficiency,
               {{"_th0.8", cycle(2, 0.8, 0.4, 4.0)}, {"_th80", cycle(2, 80.0, 40.0, 4.0)}},
               4.0, dense(4.0), "N=2, T_H in {0.8, 80}, T_C = T_H/2, lambda2 = 4"});
  f.push_back({"3a", K::efficiency, {{"", cycle(2, 0.6, 0.3, 4.0)}}, 4.0, 400,
               "N=2, T_H=0.6, T_C=0.3, lambda2 = 4"});
  f.push_back({"3b", K::entropy, {{"", cycle(2, 0.6, 0.3, 4.0)}}, 4.0, 401,
               "N=2 entropy at T = 0.6, 0.3, 0"});
  f.push_back({"4a", K::efficiency, {{"", cycle(4, 0.3, 0.15, 4.0)}}, 4.0, dense(4.0),
               "N=4, T_H=0.3, T_C=0.15, lambda2 = 4"});
  f.push_back({"4b", K::efficiency, {{"", cycle(6, 0.2, 0.1, 4.0)}}, 4.0, dense(4.0),
               "N=6, T_H=0.2, T_C=0.1, lambda2 = 4"});
  f.push_back({"4c", K::efficiency, {{"", cycle(8, 0.1, 0.06, 2.0)}}, 2.0, dense(2.0),
               "N=8, T_H=0.1, T_C=0.06, lambda2 = 2"});
  f.push_back({"4d", K::efficiency, {{"", cycle(10, 0.1, 0.06, 2.0)}}, 2.0, dense(2.0),
               "N=10, T_H=0.1, T_C=0.06, lambda2 = 2"});
  f.push_back({"5a", K::derivative, {{"", cycle(6, 0.3, 0.2, 2.0)}}, 2.0, 201,
               "eta' for N=6, T_H=0.3, T_C=0.2, lambda2 = 2"});
  f.push_back({"5b", K::derivative, {{"", cycle(10, 0.2, 0.1, 2.0)}}, 2.0, 201,
               "eta' for N=10, T_H=0.2, T_C=0.1, lambda2 = 2"});
  f.push_back({"5c", K::derivative, {{"", cycle(20, 0.12, 0.06, 2.0)}}, 2.0, 201,
               "eta' for N=20, T_H=0.12, T_C=0.06, lambda2 = 2"});
  f.push_back({"5d", K::derivative, {{"", cycle(30, 0.2, 0.1, 2.0)}}, 2.0, 201,
               "eta' for N=30, T_H=0.2, T_C=0.1, lambda2 = 2"});
  f.push_back({"6", K::efficiency, {{"", cycle(100, 800.0, 500.0, 30.0)}}, 30.0, 301,
               "N=100, T_H=800, T_C=500, lambda2 = 30"});
  f.push_back({"7a", K::efficiency, {{"", cycle(30, 0.5, 0.3, 0.8)}}, 0.8, 401,
               "N=30, T_H=0.5, T_C=0.3, lambda2 = 0.8"});
  f.push_back({"7b", K::efficiency, {{"", cycle(50, 0.2, 0.1, 0.2)}}, 0.2, 401,
               "N=50, T_H=0.2, T_C=0.1, lambda2 = 0.2"});
  f.push_back({"8", K::efficiency, {{"", cycle(20, 0.3, 0.2, 4.0)}}, 4.0, dense(4.0),
               "N=20, T_H=0.3, T_C=0.2, lambda2 = 4"});
  return f;
}

}  // namespace

const std::vector<FigureDef>& figure_catalog() {
  static const std::vector<FigureDef> catalog = build();
  return catalog;
}

std::optional<FigureDef> find_figure(const std::string& id) {
  for (const auto& f : figure_catalog()) {
    if (f.id == id) return f;
  }
  return std::nullopt;
}

}  // namespace lmgcli
