// Copyright 2026 The metricfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails or overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "metricfix/contraction.h"
#include "metricfix/derived_metric.h"
#include "metricfix/game.h"
#include "metricfix/generators.h"
#include "metricfix/hausdorff.h"
#include "metricfix/metric_space.h"
#include "metricfix/set_valued_map.h"
#include "metricfix/solver.h"

namespace metricfix {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later ones only bump the count.
class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome Finish(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double Real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<PointSet> AllSubsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<PointIndex> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    out.emplace_back(std::move(members), n);
  }
  return out;
}

PointSet RandomSubset(std::size_t n, Rng& rng) {
  std::vector<PointIndex> members;
  while (members.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1) members.push_back(i);
    }
  }
  return PointSet(std::move(members), n);
}

FiniteMetricSpace MixedSpace(std::size_t n, Rng& rng) {
  return (rng() % 3 == 0) ? RandomTableSpace(n, rng)
                          : RandomEuclideanSpace(n, 2, rng);
}

Outcome HausdorffDual() {
  Tally t;
  Rng rng(101);
  long pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto subsets = AllSubsets(n);
    for (int rep = 0; rep < 4; ++rep) {
      const FiniteMetricSpace space = MixedSpace(n, rng);
      const DerivedMetric chain =
          ChainMetric(space, ConnectivityScale(space) * Real(rng, 0.5, 1.5) +
                                 1e-3);
      for (const MetricView m : {MetricView(space), MetricView(chain)}) {
        for (const auto& a : subsets) {
          for (const auto& b : subsets) {
            ++pairs;
            t.Check(HausdorffDistance(a, b, m) == HausdorffViaExpansion(a, b, m),
                    "n=" + std::to_string(n) + " view " + m.Describe());
          }
        }
      }
    }
  }
  for (int rep = 0; rep < 10; ++rep) {
    const FiniteMetricSpace space = RandomEuclideanSpace(30, 2, rng);
    const MetricView m(space);
    for (int k = 0; k < 100; ++k) {
      const PointSet a = RandomSubset(30, rng);
      const PointSet b = RandomSubset(30, rng);
      ++pairs;
      t.Check(HausdorffDistance(a, b, m) == HausdorffViaExpansion(a, b, m),
              "30-point space " + std::to_string(rep));
    }
  }
  return t.Finish(std::to_string(pairs) + " subset pairs, exact equality");
}

Outcome HausdorffAxioms() {
  Tally t;
  Rng rng(202);
  const auto subsets = AllSubsets(5);
  long triples = 0;
  for (int rep = 0; rep < 4; ++rep) {
    const FiniteMetricSpace space = MixedSpace(5, rng);
    const MetricView m(space);
    const std::size_t s = subsets.size();
    std::vector<double> h(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        h[i * s + j] = *HausdorffDistance(subsets[i], subsets[j], m);
      }
    }
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        const double hij = h[i * s + j];
        t.Check(i == j ? hij == 0.0 : hij > 0.0, "identity/positivity");
        t.Check(hij == h[j * s + i], "symmetry");
        for (std::size_t k = 0; k < s; ++k) {
          ++triples;
          if (h[i * s + k] > hij + h[j * s + k] + 1e-12) {
            t.Check(false, "triangle");
          }
        }
      }
    }
  }
  return t.Finish(std::to_string(triples) +
                  " ordered subset triples on 5-point spaces, tol 1e-12");
}

// Even reps: an orbit space whose exact affine contraction seeds the local
// search. Odd reps: a random cloud searched from a constant map.
struct Instance {
  FiniteMetricSpace space;
  std::optional<SetValuedMap> start;
};

Instance MakeInstance(int rep, std::size_t max_n, Rng& rng) {
  if (rep % 2 == 0) {
    auto orbit = RandomOrbitInstance(Uniform(rng, 1, 6), Uniform(rng, 1, 6),
                                     Real(rng, 0.1, 0.45), rng);
    return {std::move(orbit.space), std::move(orbit.map)};
  }
  return {RandomEuclideanSpace(Uniform(rng, 5, max_n), 2, rng), std::nullopt};
}

SetValuedMap Contract(const Instance& inst, ContractionSpec spec, Rng& rng) {
  if (inst.start) {
    spec.beta = std::max(
        spec.beta, GlobalModulus(*inst.start, MetricView(inst.space)).modulus);
  }
  return GenerateContraction(inst.space, spec, rng,
                             inst.start ? &*inst.start : nullptr);
}

// Scale between half and twice the connectivity scale, so both connected
// and fragmented threshold graphs occur.
double ScaleFor(const FiniteMetricSpace& space, Rng& rng) {
  const double base = ConnectivityScale(space);
  return base > 0.0 ? base * Real(rng, 0.5, 2.0) : 1.0;
}

Outcome ChainDominatesBase() {
  Tally t;
  Rng rng(303);
  for (int rep = 0; rep < 100; ++rep) {
    const FiniteMetricSpace space = MixedSpace(Uniform(rng, 2, 100), rng);
    const double r = ScaleFor(space, rng);
    const DerivedMetric dc = ChainMetric(space, r);
    const std::string tag = "space " + std::to_string(rep);
    for (PointIndex i = 0; i < space.size(); ++i) {
      for (PointIndex j = 0; j < space.size(); ++j) {
        const auto v = dc.distance(i, j);
        const double d = space.distance(i, j);
        if (d < r) t.Check(v && *v == d, tag + ": d < r but d_c != d");
        if (v) t.Check(d <= *v, tag + ": d_c < d");
      }
    }
    for (const auto& cls : dc.components().classes) {
      std::vector<std::string> labels;
      std::vector<double> table;
      for (PointIndex i : cls) {
        labels.push_back(space.label(i));
        for (PointIndex j : cls) table.push_back(*dc.distance(i, j));
      }
      const FiniteMetricSpace sub(std::move(labels), std::move(table));
      t.Check(ValidateMetric(sub).passed, tag + ": component fails validation");
    }
  }
  return t.Finish("100 spaces, n <= 100");
}

Outcome ChainPathCoincide() {
  Tally t;
  Rng rng(404);
  for (int rep = 0; rep < 100; ++rep) {
    const FiniteMetricSpace space = MixedSpace(Uniform(rng, 2, 100), rng);
    const double r = ScaleFor(space, rng);
    const DerivedMetric dc = ChainMetric(space, r);
    const DerivedMetric dr = PathMetric(space, r);
    bool same = true;
    for (PointIndex i = 0; i < space.size(); ++i) {
      for (PointIndex j = 0; j < space.size(); ++j) {
        same = same && dc.distance(i, j) == dr.distance(i, j);
      }
    }
    t.Check(same, "space " + std::to_string(rep));
  }
  return t.Finish("100 spaces, bitwise-equal tables");
}

Outcome CompositionBound() {
  Tally t;
  Rng rng(505);
  double worst_slack = -1.0;
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = MakeInstance(rep, 30, rng);
    const FiniteMetricSpace& space = inst.space;
    ContractionSpec spec;
    spec.beta = Real(rng, 0.2, 0.95);
    const SetValuedMap f1 = Contract(inst, spec, rng);
    spec.beta = Real(rng, 0.2, 0.95);
    const SetValuedMap f2 = Contract(inst, spec, rng);
    const MetricView m(space);
    const double b1 = GlobalModulus(f1, m).modulus;
    const double b2 = GlobalModulus(f2, m).modulus;
    const double b12 = GlobalModulus(Compose(f1, f2), m).modulus;
    t.Check(b1 < 1.0 && b2 < 1.0, "generated map not contractive");
    t.Check(b12 <= b1 * b2 + 1e-9, "pair " + std::to_string(rep));
    worst_slack = std::max(worst_slack, b12 - b1 * b2);
  }
  std::ostringstream s;
  s << "200 pairs, max(beta12 - beta1*beta2) = " << worst_slack;
  return t.Finish(s.str());
}

Outcome LocalExistence() {
  Tally t;
  Rng rng(606);
  std::size_t max_steps = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = MakeInstance(rep, 60, rng);
    const FiniteMetricSpace& space = inst.space;
    const double r = ConnectivityScale(space) * Real(rng, 1.05, 1.6);
    const std::string tag = "space " + std::to_string(rep);
    t.Check(IsRChainable(space, r).chainable, tag + ": not r-chainable");
    ContractionSpec spec;
    spec.scope = ContractionScope::kLocal;
    spec.r = r;
    spec.beta = Real(rng, 0.3, 0.9);
    const SetValuedMap f = Contract(inst, spec, rng);
    const ContractionCertificate cert =
        LocalCertificate(f, MetricView(space), r);
    t.Check(cert.holds && cert.modulus <= 0.9, tag + ": uncertified");
    t.Check(!FixedPoints(f).empty(), tag + ": no fixed point");
    const DerivedMetric dc = ChainMetric(space, r);
    const MetricView m(dc);
    for (PointIndex x0 = 0; x0 < space.size(); ++x0) {
      const SolveTrace trace = SolveFixedPoint(f, m, x0, space.size());
      t.Check(trace.outcome == SolveOutcome::kFixedPoint &&
                  trace.steps() <= space.size(),
              tag + ": solver did not reach a fixed point");
      max_steps = std::max(max_steps, trace.steps());
      for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
        const auto step = m(trace.iterates[k], trace.iterates[k + 1]);
        const auto next_gap = trace.gaps[k + 1];
        t.Check(step && next_gap &&
                    *next_gap <= cert.modulus * *step + 1e-12,
                tag + ": gap contraction violated");
      }
    }
  }
  return t.Finish("100 r-chainable spaces, chain view, max trace " +
                  std::to_string(max_steps) + " steps");
}

Outcome PeriodicCase() {
  Tally t;
  const SetValuedMap f = TwoClusterSwapMap();
  t.Check(FixedPoints(f).empty(), "F has a fixed point");
  const auto periodic = FindPeriodicPoint(f, 2);
  t.Check(periodic && periodic->period == 2, "no period-2 point");
  if (periodic) {
    t.Check(Iterate(f, 2).image(periodic->point).contains(periodic->point),
            "x not in F^2(x)");
  }
  return t.Finish("two-cluster swap map");
}

Outcome LengthBound() {
  Tally t;
  Rng rng(808);
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = MakeInstance(rep, 40, rng);
    const FiniteMetricSpace& space = inst.space;
    ContractionSpec spec;
    spec.scope = ContractionScope::kPointwise;
    spec.beta = Real(rng, 0.3, 0.9);
    spec.set_valued = rng() & 1;
    spec.neighborhood =
        (rng() & 1) ? Neighborhood::Nearest(Uniform(rng, 1, 4))
                    : Neighborhood::Radius(ConnectivityScale(space) *
                                           Real(rng, 1.05, 2.0));
    const SetValuedMap f = Contract(inst, spec, rng);
    const MetricView m(space);
    const auto cert = PointwiseCertificate(f, m, spec.neighborhood);
    const std::string tag = "pair " + std::to_string(rep);
    t.Check(cert.holds && cert.uniform, tag + ": uncertified");
    const DiscretePath path =
        RandomWalkPath(space, spec.neighborhood, Uniform(rng, 1, 20), rng);
    const double image = *ImagePathLength(f, path, m);
    t.Check(image <= cert.modulus * PathLength(space, path) + 1e-9, tag);
  }
  return t.Finish("200 (map, path) pairs");
}

Outcome PathViewShrinking() {
  Tally t;
  Rng rng(909);
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = MakeInstance(rep, 60, rng);
    const FiniteMetricSpace& space = inst.space;
    const double eps = ConnectivityScale(space) * Real(rng, 1.05, 2.0);
    ContractionSpec spec;
    spec.scope = ContractionScope::kPointwise;
    spec.neighborhood = Neighborhood::Radius(eps);
    spec.beta = Real(rng, 0.3, 0.9);
    spec.set_valued = rng() & 1;
    const SetValuedMap f = Contract(inst, spec, rng);
    const std::string tag = "space " + std::to_string(rep);
    t.Check(PointwiseCertificate(f, MetricView(space), spec.neighborhood).holds,
            tag + ": uncertified");
    const DerivedMetric dr = PathMetric(space, eps);
    t.Check(dr.components().num_classes() == 1, tag + ": disconnected");
    t.Check(ShrinkingCertificate(f, MetricView(dr)).holds,
            tag + ": not shrinking under d_eps");
  }
  return t.Finish("100 connected spaces");
}

Outcome NashRegression() {
  Tally t;
  const Game game = QuadraticGame(0.25, 0.5, 21);
  const auto equilibria = NashEquilibria(game);
  const Profile analytic = {10, 10};  // 0.25 / (1 - 0.5) = 0.5
  std::ostringstream found;
  for (const auto& p : equilibria) {
    const auto labels = game.ProfileLabels(p);
    found << "(" << labels[0] << "," << labels[1] << ")";
  }
  t.Check(equilibria == std::vector<Profile>{analytic},
          "equilibria " + found.str() + " != {(0.5,0.5)}");
  std::size_t worst = 0;
  int cycles = 0;
  for (std::size_t i = 0; i < 21; ++i) {
    for (std::size_t j = 0; j < 21; ++j) {
      const auto dyn = NashViaDynamics(game, {i, j}, kDefaultTieTolerance, 441);
      t.Check(dyn.verified, "dynamics did not converge");
      if (dyn.trace.outcome == SolveOutcome::kCycle) ++cycles;
      worst = std::max(worst, dyn.trace.steps());
    }
  }
  t.Check(worst <= 25, "trace longer than 25 steps");
  CertifyParams params;
  params.r = 0.1;
  const auto report = CertifyContractive(game, GameCondition::kA, params);
  std::ostringstream modulus;
  modulus.precision(17);
  modulus << report.br_certificate.modulus;
  t.Check(report.verdict && report.br_certificate.modulus <= 0.5 + 1e-9,
          "condition (a) BR local modulus " + modulus.str());
  return t.Finish("equilibria " + found.str() + ", " +
                  std::to_string(cycles) + "/441 dynamics runs cycle, longest "
                  "trace " + std::to_string(worst) + ", local modulus " +
                  modulus.str());
}

Outcome NegativeControl() {
  Tally t;
  const Game game = DiscoordinationGame();
  t.Check(NashEquilibria(game).empty(), "equilibrium found");
  const SetValuedMap br = BestResponseMap(game);
  const MetricView m(br.space());
  const double modulus = GlobalModulus(br, m).modulus;
  t.Check(modulus >= 1.0, "BR modulus < 1");
  t.Check(!GlobalModulus(br, m).holds && !ShrinkingCertificate(br, m).holds &&
              !PointwiseCertificate(br, m, Neighborhood::Nearest(3)).holds &&
              !LocalCertificate(br, m, 1.0).holds,
          "a certificate holds");
  CertifyParams params;
  params.r = 1.5;
  params.eps = 1.5;
  for (auto c : {GameCondition::kA, GameCondition::kB,
                 GameCondition::kC}) {
    t.Check(!CertifyContractive(game, c, params).verdict,
            "condition " + std::string(GameConditionName(c)) + " holds");
  }
  const auto dyn = NashViaDynamics(game, {0, 0}, kDefaultTieTolerance, 100);
  t.Check(dyn.trace.outcome == SolveOutcome::kCycle, "no cycle detected");
  return t.Finish("BR modulus " + std::to_string(modulus));
}

Outcome NashOracle() {
  Tally t;
  Rng rng(1212);
  std::size_t total = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const Game game = RandomTableGame(
        {Uniform(rng, 1, 20), Uniform(rng, 1, 20)}, 3, rng);
    const auto via_br = NashEquilibria(game);
    total += via_br.size();
    t.Check(via_br == NashByDeviationScan(game), "game " + std::to_string(rep));
  }
  return t.Finish("50 table games, " + std::to_string(total) + " equilibria");
}

Outcome Reparametrization() {
  Tally t;
  Rng rng(1313);
  for (int rep = 0; rep < 200; ++rep) {
    const FiniteMetricSpace space = MixedSpace(Uniform(rng, 2, 30), rng);
    const DiscretePath path = RandomPath(space, Uniform(rng, 2, 25), rng);
    const DiscretePath bar = Reparametrize(space, path);
    const double total = PathLength(space, bar);
    t.Check(total == PathLength(space, path), "total length changed");
    for (std::size_t k = 1; k < bar.size(); ++k) {
      const double tk = bar.params()[k];
      const double partial = PathLength(space, bar, ParamRange{0.0, tk});
      t.Check(std::abs(partial - tk * total) <= 1e-12 * total,
              "path " + std::to_string(rep) + " waypoint " + std::to_string(k));
    }
  }
  return t.Finish("200 paths");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace metricfix

int main() {
  using metricfix::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "hausdorff dual formulations agree", 10, metricfix::HausdorffDual},
      {2, "hausdorff metric axioms", 60, metricfix::HausdorffAxioms},
      {3, "chain metric dominates and matches d below r", 30,
       metricfix::ChainDominatesBase},
      {4, "chain and path metrics coincide", 30, metricfix::ChainPathCoincide},
      {5, "composition modulus bound", 30, metricfix::CompositionBound},
      {6, "local contraction existence and gap contraction", 60,
       metricfix::LocalExistence},
      {7, "two-cluster swap has period 2", 1, metricfix::PeriodicCase},
      {8, "image path length bound", 30, metricfix::LengthBound},
      {9, "pointwise contraction shrinks under path metric", 60,
       metricfix::PathViewShrinking},
      {10, "quadratic game nash regression", 30, metricfix::NashRegression},
      {11, "discoordination negative control", 1, metricfix::NegativeControl},
      {12, "nash enumeration matches deviation oracle", 30,
       metricfix::NashOracle},
      {13, "reparametrization identity", 5, metricfix::Reparametrization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    metricfix::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool in_time = seconds < c.budget_s;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-48s %7.3fs (budget %gs)%s  %s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, seconds, c.budget_s,
                in_time ? "" : " OVER BUDGET", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
