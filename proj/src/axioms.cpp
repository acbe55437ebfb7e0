#include "mhp/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mhp/errors.hpp"

// Witness layouts (contracts | alphas) per axiom and form:
//   weak_order     transitivity  a, b, c                 | -
//   monotonicity   strict        sure high, sure low     | -
//   dominance      weak          statewise better, worse | -
//   continuity     jump          w, w', w'', lowered w'' | alpha inside, alpha outside
//                  refinement    w, w', w''              | coarse alpha, next coarse alpha
//   quasiconvexity weak          w, w' (indifferent)     | alpha
//   vnm            weak, strict, converse:  x, y, z (constant) | alpha
//   mmr            weak, strict: w, w', y, y' (y constant)     | alpha
//
// Weak forms fail when the conclusion's value difference is below
// -violation_margin; strict forms need a hypothesis difference above
// violation_margin and fail when the conclusion's difference is at most band.

namespace mhp {

namespace {

struct Assessment {
  bool hypothesis = false;
  std::optional<double> margin;
  std::vector<double> values;
};

double prize_of(const Contract& c) { return c.at(0).support().front().prize; }

bool is_sure_prize(const Contract& c) { return c.is_constant() && c.at(0).is_degenerate(); }

Contract sure(const OutputSpace& space, const Lottery& x) { return Contract::constant(space, x); }

Assessment assess(const PreferenceOracle& o, Axiom which, const std::string& form,
                  const std::vector<Contract>& c, const std::vector<double>& a, double band, double margin) {
  Assessment r;
  auto need = [&](std::size_t nc, std::size_t na) {
    if (c.size() != nc || a.size() != na) throw InputError("axiom witness has the wrong shape");
  };
  auto weak_fail = [&](double diff) {
    if (diff < -margin) r.margin = -diff;
  };
  auto strict_fail = [&](double diff) {
    if (diff <= band) r.margin = band - diff;
  };
  switch (which) {
    case Axiom::weak_order: {
      need(3, 0);
      r.values = {value(o, c[0]), value(o, c[1]), value(o, c[2])};
      r.hypothesis = r.values[0] >= r.values[1] - band && r.values[1] >= r.values[2] - band;
      if (r.hypothesis) weak_fail(r.values[0] - r.values[2]);
      break;
    }
    case Axiom::monotonicity: {
      need(2, 0);
      if (!is_sure_prize(c[0]) || !is_sure_prize(c[1])) throw InputError("monotonicity witness needs sure prizes");
      r.values = {value(o, c[0]), value(o, c[1])};
      r.hypothesis = prize_of(c[0]) > prize_of(c[1]);
      if (r.hypothesis) strict_fail(r.values[0] - r.values[1]);
      break;
    }
    case Axiom::dominance: {
      need(2, 0);
      r.hypothesis = true;
      for (std::size_t s = 0; s < c[0].size() && r.hypothesis; ++s)
        r.hypothesis = weakly_prefers(o, sure(o.space(), c[0].at(s)), sure(o.space(), c[1].at(s)), band);
      r.values = {value(o, c[0]), value(o, c[1])};
      if (r.hypothesis) weak_fail(r.values[0] - r.values[1]);
      break;
    }
    case Axiom::continuity_surrogate: {
      if (form == "jump") {
        need(4, 2);
        const double v_in = value(o, mix_contracts(a[0], c[0], c[1]));
        const double v_out = value(o, mix_contracts(a[1], c[0], c[1]));
        const double v_target = value(o, c[2]);
        const double v_lowered = value(o, c[3]);
        r.values = {v_in, v_out, v_target, v_lowered};
        r.hypothesis = std::abs(a[0] - a[1]) <= 1e-9 && v_in >= v_target - band && v_target >= v_lowered - band;
        if (r.hypothesis) weak_fail(v_out - v_lowered);
      } else {
        // Membership must flip somewhere in [a0, a1] once the step is halved.
        need(3, 2);
        const double v_target = value(o, c[2]);
        auto member = [&](double al) { return value(o, mix_contracts(al, c[0], c[1])) >= v_target - band; };
        const bool m0 = member(a[0]);
        const bool m1 = member(a[1]);
        const bool mid = member(0.5 * (a[0] + a[1]));
        r.values = {v_target};
        r.hypothesis = m0 != m1;
        if (r.hypothesis && m0 == mid && mid == m1) r.margin = 0.0;
      }
      break;
    }
    case Axiom::quasiconvexity: {
      need(2, 1);
      const double v0 = value(o, c[0]);
      const double v1 = value(o, c[1]);
      const double vm = value(o, mix_contracts(a[0], c[0], c[1]));
      r.values = {v0, v1, vm};
      r.hypothesis = std::abs(v0 - v1) <= band;
      if (r.hypothesis) weak_fail(std::max(v0, v1) - vm);
      break;
    }
    case Axiom::vnm_independence: {
      need(3, 1);
      for (const auto& x : c)
        if (!x.is_constant()) throw InputError("vnm witness needs constant contracts");
      const double vx = value(o, c[0]);
      const double vy = value(o, c[1]);
      const double vmx = value(o, mix_contracts(a[0], c[0], c[2]));
      const double vmy = value(o, mix_contracts(a[0], c[1], c[2]));
      r.values = {vx, vy, vmx, vmy};
      if (form == "weak") {
        r.hypothesis = vx >= vy - band;
        if (r.hypothesis) weak_fail(vmx - vmy);
      } else if (form == "strict") {
        r.hypothesis = a[0] > 0.0 && vx - vy > margin;
        if (r.hypothesis) strict_fail(vmx - vmy);
      } else {
        r.hypothesis = a[0] > 0.0 && vmx >= vmy - band;
        if (r.hypothesis) weak_fail(vx - vy);
      }
      break;
    }
    case Axiom::mmr_independence: {
      need(4, 1);
      if (!c[2].is_constant() || !c[3].is_constant()) throw InputError("mmr witness needs constant y, y'");
      const double v0 = value(o, mix_contracts(a[0], c[0], c[2]));
      const double v1 = value(o, mix_contracts(a[0], c[1], c[2]));
      const double v2 = value(o, mix_contracts(a[0], c[0], c[3]));
      const double v3 = value(o, mix_contracts(a[0], c[1], c[3]));
      r.values = {v0, v1, v2, v3};
      if (form == "weak") {
        r.hypothesis = v0 >= v1 - band;
        if (r.hypothesis) weak_fail(v2 - v3);
      } else {
        r.hypothesis = v0 - v1 > margin;
        if (r.hypothesis) strict_fail(v2 - v3);
      }
      break;
    }
  }
  return r;
}

// Shifts every state of w2 by the utility amount k.
std::optional<Contract> shifted(const PreferenceOracle& o, const Contract& w2, double k) {
  auto f = utility_vector(o.utility(), w2);
  for (double& x : f) x += k;
  try {
    return contract_from_utility_vector(o.utility(), o.space(), f);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<double> sorted_grid(const std::vector<double>& g) {
  std::vector<double> s = g;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

class Checker {
 public:
  Checker(const PreferenceOracle& o, Axiom which, const SamplerConfig& cfg)
      : o_(o), which_(which), cfg_(cfg), grid_(sorted_grid(cfg.mixture_grid)) {}

  std::optional<AxiomWitness> operator()(Rng& rng, bool& hypothesis) const {
    switch (which_) {
      case Axiom::weak_order: return weak_order(rng, hypothesis);
      case Axiom::monotonicity: return monotonicity(rng, hypothesis);
      case Axiom::dominance: return dominance(rng, hypothesis);
      case Axiom::continuity_surrogate: return continuity(rng, hypothesis);
      case Axiom::quasiconvexity: return quasiconvexity(rng, hypothesis);
      case Axiom::vnm_independence: return vnm(rng, hypothesis);
      case Axiom::mmr_independence: return mmr(rng, hypothesis);
    }
    return std::nullopt;
  }

 private:
  std::optional<AxiomWitness> test(const std::string& form, std::vector<Contract> c, std::vector<double> a,
                                   bool& hypothesis) const {
    const Assessment r = assess(o_, which_, form, c, a, cfg_.band, cfg_.violation_margin);
    hypothesis = hypothesis || r.hypothesis;
    if (!r.margin) return std::nullopt;
    return AxiomWitness{form, std::move(c), std::move(a), r.values, *r.margin};
  }

  Contract random_w(Rng& rng) const { return random_contract(rng, o_.space(), cfg_); }
  Contract random_sure(Rng& rng) const { return sure(o_.space(), random_lottery(rng, cfg_)); }

  std::optional<AxiomWitness> weak_order(Rng& rng, bool& h) const {
    std::array<Contract, 3> w{random_w(rng), random_w(rng), random_w(rng)};
    std::array<double, 3> v{value(o_, w[0]), value(o_, w[1]), value(o_, w[2])};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return v[x] > v[y]; });
    return test("transitivity", {w[idx[0]], w[idx[1]], w[idx[2]]}, {}, h);
  }

  std::optional<AxiomWitness> monotonicity(Rng& rng, bool& h) const {
    double x = rng.uniform(cfg_.prize_lo, cfg_.prize_hi);
    double y = rng.uniform(cfg_.prize_lo, cfg_.prize_hi);
    if (std::abs(x - y) < 0.01) return std::nullopt;
    if (x < y) std::swap(x, y);
    return test("strict", {sure(o_.space(), Lottery::degenerate(x)), sure(o_.space(), Lottery::degenerate(y))},
                {}, h);
  }

  std::optional<AxiomWitness> dominance(Rng& rng, bool& h) const {
    const Contract w = random_w(rng);
    const Contract w2 = random_w(rng);
    std::vector<Lottery> hi;
    std::vector<Lottery> lo;
    for (std::size_t s = 0; s < w.size(); ++s) {
      const bool first = weakly_prefers(o_, sure(o_.space(), w.at(s)), sure(o_.space(), w2.at(s)), cfg_.band);
      hi.push_back(first ? w.at(s) : w2.at(s));
      lo.push_back(first ? w2.at(s) : w.at(s));
    }
    return test("weak", {Contract(o_.space(), hi), Contract(o_.space(), lo)}, {}, h);
  }

  std::optional<AxiomWitness> continuity(Rng& rng, bool& h) const {
    const Contract w = random_w(rng);
    const Contract w2 = random_w(rng);
    Contract target = random_w(rng);
    if (rng.bernoulli(0.5)) {
      const double al = rng.uniform01();
      try {
        target = sure(o_.space(), Lottery::degenerate(certainty_equivalent(o_, mix_contracts(al, w, w2))));
      } catch (const Error&) {
      }
    }
    const double v_target = value(o_, target);
    auto member = [&](double al) { return value(o_, mix_contracts(al, w, w2)) >= v_target - cfg_.band; };
    std::vector<char> in(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) in[i] = member(grid_[i]);

    const auto& u = o_.utility();
    const double low_prize = u.has_bounded_domain() ? u.domain_lo() : cfg_.prize_lo - 1.0;
    const Contract lowered = mix_contracts(1.0 - 1e-6, target, sure(o_.space(), Lottery::degenerate(low_prize)));
    for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
      if (in[i] == in[i + 1]) continue;
      if (auto wit = test("refinement", {w, w2, target}, {grid_[i], grid_[i + 1]}, h)) return wit;
      double lo = grid_[i];
      double hi = grid_[i + 1];
      const bool lo_in = in[i];
      for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (member(mid) == lo_in ? lo : hi) = mid;
      }
      const double a_in = lo_in ? lo : hi;
      const double a_out = lo_in ? hi : lo;
      if (auto wit = test("jump", {w, w2, target, lowered}, {a_in, a_out}, h)) return wit;
    }
    return std::nullopt;
  }

  std::optional<AxiomWitness> quasiconvexity(Rng& rng, bool& h) const {
    const Contract w = random_w(rng);
    const Contract w2 = random_w(rng);
    const double al = grid_[rng.index(grid_.size())];
    const auto w2s = shifted(o_, w2, value(o_, w) - value(o_, w2));
    if (!w2s) return std::nullopt;
    return test("weak", {w, *w2s}, {al}, h);
  }

  std::optional<AxiomWitness> vnm(Rng& rng, bool& h) const {
    Contract x = random_sure(rng);
    Contract y = random_sure(rng);
    const Contract z = random_sure(rng);
    const double al = grid_[rng.index(grid_.size())];
    if (value(o_, x) < value(o_, y)) std::swap(x, y);
    if (auto wit = test("weak", {x, y, z}, {al}, h)) return wit;
    if (auto wit = test("strict", {x, y, z}, {al}, h)) return wit;
    if (value(o_, mix_contracts(al, x, z)) < value(o_, mix_contracts(al, y, z))) std::swap(x, y);
    return test("converse", {x, y, z}, {al}, h);
  }

  std::optional<AxiomWitness> mmr(Rng& rng, bool& h) const {
    Contract w = random_w(rng);
    Contract w2 = random_w(rng);
    const Contract y = random_sure(rng);
    const Contract y2 = random_sure(rng);
    double al = grid_[rng.index(grid_.size())];
    if (al == 0.0) al = grid_.back();
    auto gap = [&](const Contract& a, const Contract& b) {
      return value(o_, mix_contracts(al, a, y)) - value(o_, mix_contracts(al, b, y));
    };
    if (rng.bernoulli(0.5)) {
      // Calibrate a utility shift of w2 that makes the y-mixtures indifferent.
      double lo = -1.0;
      double hi = 1.0;
      auto g = [&](double k) -> std::optional<double> {
        auto s = shifted(o_, w2, k);
        if (!s) return std::nullopt;
        return gap(w, *s);
      };
      bool ok = true;
      for (int it = 0; ok; ++it) {
        const auto glo = g(lo);
        const auto ghi = g(hi);
        if (!glo || !ghi || it > 30) ok = false;
        else if (*glo < 0.0) lo *= 2.0;
        else if (*ghi > 0.0) hi *= 2.0;
        else break;
      }
      if (ok) {
        for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
          const double mid = 0.5 * (lo + hi);
          const auto gm = g(mid);
          if (!gm) break;
          (*gm > 0.0 ? lo : hi) = mid;
        }
        if (auto s = shifted(o_, w2, 0.5 * (lo + hi))) w2 = *s;
      }
    }
    if (gap(w, w2) < 0.0) std::swap(w, w2);
    if (auto wit = test("weak", {w, w2, y, y2}, {al}, h)) return wit;
    return test("strict", {w, w2, y, y2}, {al}, h);
  }

  const PreferenceOracle& o_;
  Axiom which_;
  const SamplerConfig& cfg_;
  std::vector<double> grid_;
};

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::weak_order: return "weak_order";
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::dominance: return "dominance";
    case Axiom::continuity_surrogate: return "continuity_surrogate";
    case Axiom::quasiconvexity: return "quasiconvexity";
    case Axiom::vnm_independence: return "vnm_independence";
    case Axiom::mmr_independence: return "mmr_independence";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  if (name == "continuity") return Axiom::continuity_surrogate;
  if (name == "vnm") return Axiom::vnm_independence;
  if (name == "mmr") return Axiom::mmr_independence;
  return std::nullopt;
}

AxiomVerdict check_axiom(const PreferenceOracle& o, Axiom which, const SamplerConfig& cfg) {
  cfg.validate();
  const Checker checker(o, which, cfg);
  auto outcome = run_search<AxiomWitness>(cfg, [&](Rng& rng, bool& h) { return checker(rng, h); });
  AxiomVerdict v;
  v.axiom = which;
  v.samples = outcome.samples_run;
  v.hypothesis_samples = outcome.hypothesis_count;
  v.surrogate = which == Axiom::continuity_surrogate;
  v.passed = !outcome.witness.has_value();
  v.witness = std::move(outcome.witness);
  return v;
}

std::optional<double> reverify_axiom_witness(const PreferenceOracle& o, Axiom which, const AxiomWitness& w,
                                             double band, double violation_margin) {
  for (const auto& c : w.contracts)
    if (!(c.space() == o.space())) throw DomainError("witness contract is not on the oracle's output space");
  const Assessment r = assess(o, which, w.form, w.contracts, w.alphas, band, violation_margin);
  return r.hypothesis ? r.margin : std::nullopt;
}

}  // namespace mhp
