#include "loopcalc/fuzz.hpp"

#include <regex>

#include "loopcalc/homology.hpp"

namespace loopcalc {

namespace {

// Runs `f`, turning any exception into a failed check.
template <typename F>
bool safely(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return false;
  }
}

GateOrientation random_orientation(std::size_t n, Rng& rng) {
  GateOrientation w(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& e : w) e = coin(rng) ? 1 : -1;
  return w;
}

std::vector<GateOrientation> orientations_for(std::size_t n, Rng& rng, const PropertyOptions& opt) {
  if (n <= opt.exhaustive_gates) return all_orientations(n);
  std::vector<GateOrientation> out{GateOrientation(n, 1)};
  for (std::size_t i = 0; i < opt.sampled_orientations; ++i) out.push_back(random_orientation(n, rng));
  return out;
}

struct Outputs {
  Coefficient form;
  FormalSum bracket;
  TensorSum cobracket_a;
  TensorSum cobracket_b;
  HomotopyClass class_a;
  HomotopyClass class_b;
};

Outputs star_outputs(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b) {
  return {aggregate_form(s, a, b).sum,      aggregate_bracket(s, a, b).sum, aggregate_cobracket(s, a).sum,
          aggregate_cobracket(s, b).sum,    to_class(s, a),                 to_class(s, b)};
}

}  // namespace

bool CheckTally::record(const std::string& name, bool ok) {
  if (ok) {
    ++passed[name];
  } else {
    ++failed[name];
  }
  return ok;
}

std::size_t CheckTally::total_passed() const {
  std::size_t n = 0;
  for (const auto& [k, v] : passed) n += v;
  return n;
}

std::size_t CheckTally::total_failed() const {
  std::size_t n = 0;
  for (const auto& [k, v] : failed) n += v;
  return n;
}

void CheckTally::merge(const CheckTally& o) {
  for (const auto& [k, v] : o.passed) passed[k] += v;
  for (const auto& [k, v] : o.failed) failed[k] += v;
}

void check_method_agreement(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                            CheckTally& t, const PropertyOptions& opt) {
  GateRouteOptions g;
  g.expand = opt.expand;
  t.record("method.form", safely([&] {
             const auto x = aggregate_form(s, a, b);
             const auto y = gate_route_form(s, a, b, g);
             return x.sum == y.sum && x.per_star == y.per_star;
           }));
  t.record("method.bracket", safely([&] {
             const auto x = aggregate_bracket(s, a, b);
             const auto y = gate_route_bracket(s, a, b, g);
             return x.sum == y.sum && x.per_star == y.per_star;
           }));
  for (const auto& [name, loop] : {std::pair{"method.cobracket_a", &a}, std::pair{"method.cobracket_b", &b}}) {
    t.record(name, safely([&] {
               const auto x = aggregate_cobracket(s, *loop);
               const auto y = gate_route_cobracket(s, *loop, g);
               return x.sum == y.sum && x.per_star == y.per_star;
             }));
  }
}

void check_omega_independence(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                              Rng& rng, CheckTally& t, const PropertyOptions& opt) {
  bool form_ok = true, bracket_ok = true, cobracket_ok = true;
  const CombinatorialLoop pair[] = {a, b};
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const bool ok = safely([&] {
      const GateConfiguration c2 = expand_to_gates(s, i, pair, opt.expand);
      const GateConfiguration c1 = expand_to_gates(s, i, std::span(pair, 1), opt.expand);
      const Coefficient f0 = gate::form(c2);
      const FormalSum b0 = gate::bracket(c2);
      const TensorSum n0 = gate::cobracket(c1);
      for (const auto& w : orientations_for(c2.gates.size(), rng, opt)) {
        if (gate::form(c2, w) != f0) form_ok = false;
        if (gate::bracket(c2, w) != b0) bracket_ok = false;
        if (gate::cobracket(c1, w) != n0) cobracket_ok = false;
      }
      return true;
    });
    if (!ok) form_ok = bracket_ok = cobracket_ok = false;
  }
  t.record("omega.form", form_ok);
  t.record("omega.bracket", bracket_ok);
  t.record("omega.cobracket", cobracket_ok);
}

void check_identities(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b, Rng& rng,
                      CheckTally& t, const PropertyOptions& opt) {
  std::map<std::string, bool> ok{{"identity.flip", true},           {"identity.form_reversal", true},
                                 {"identity.bracket_reversal", true}, {"identity.mu_symmetry", true},
                                 {"identity.averaged_bracket", true},   {"identity.averaged_form", true},
                                 {"identity.cobracket_skew", true}};
  const CombinatorialLoop pair[] = {a, b};
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const bool fine = safely([&] {
      const GateConfiguration c2 = expand_to_gates(s, i, pair, opt.expand);
      const GateConfiguration c1 = expand_to_gates(s, i, std::span(pair, 1), opt.expand);
      const GateConfiguration swapped = swap_owners(c2);
      const GateOrientation w = random_orientation(c2.gates.size(), rng);
      const GateOrientation wbar = opposite(w);
      for (std::size_t l = 0; l < c2.gates.size(); ++l) {
        const auto [lhs, rhs] = gate::flip_check(c2, w, l);
        if (lhs != rhs) ok["identity.flip"] = false;
      }
      if (gate::form_omega(c2, w) != -gate::form_omega(swapped, wbar)) ok["identity.form_reversal"] = false;
      if (gate::bracket_omega(c2, w) != -gate::bracket_omega(swapped, wbar)) ok["identity.bracket_reversal"] = false;
      FormalSum mu_total;
      Coefficient vv_total = 0;
      for (std::size_t l = 0; l < c2.gates.size(); ++l) {
        const FormalSum m = gate::mu(c2, l);
        if (m != gate::mu(swapped, l)) ok["identity.mu_symmetry"] = false;
        mu_total += w[l] * m;
        vv_total += w[l] * gate::v(c2, l, 0) * gate::v(c2, l, 1);
      }
      if (2 * gate::bracket_omega(c2, w) != gate::bracket(c2, w) + mu_total) ok["identity.averaged_bracket"] = false;
      if (2 * gate::form_omega(c2, w) != gate::form(c2, w) + vv_total) ok["identity.averaged_form"] = false;
      const TensorSum nu = gate::cobracket(c1, w);
      if (!(nu + transpose(nu)).zero()) ok["identity.cobracket_skew"] = false;
      return true;
    });
    if (!fine) {
      for (auto& [k, v] : ok) v = false;
    }
  }
  t.record("identity.cobracket_skew", ok["identity.cobracket_skew"] && safely([&] {
                                        const TensorSum nu = aggregate_cobracket(s, a).sum;
                                        return (nu + transpose(nu)).zero();
                                      }));
  ok.erase("identity.cobracket_skew");
  for (const auto& [k, v] : ok) t.record(k, v);
}

void check_evenness(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                    CheckTally& t, const PropertyOptions& opt) {
  GateRouteOptions g;
  g.expand = opt.expand;
  t.record("evenness.form", safely([&] { return aggregate_form(s, a, b).even && gate_route_form(s, a, b, g).even; }));
  t.record("evenness.bracket",
           safely([&] { return aggregate_bracket(s, a, b).even && gate_route_bracket(s, a, b, g).even; }));
  t.record("evenness.cobracket", safely([&] {
             return aggregate_cobracket(s, a).even && aggregate_cobracket(s, b).even &&
                    gate_route_cobracket(s, a, g).even && gate_route_cobracket(s, b, g).even;
           }));
}

void check_abelian_shadows(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                           CheckTally& t) {
  const Abelianization h(s);
  const IntVector ha = h(to_class(s, a));
  const IntVector hb = h(to_class(s, b));
  t.record("abelian.bracket_terms", safely([&] {
             for (const auto& [c, k] : aggregate_bracket(s, a, b).sum) {
               if (h(c) != ha + hb) return false;
             }
             return true;
           }));
  t.record("abelian.cobracket_terms", safely([&] {
             for (const auto& [loop, hl] : {std::pair{&a, &ha}, std::pair{&b, &hb}}) {
               for (const auto& [p, k] : aggregate_cobracket(s, *loop).sum) {
                 if (h(p.first) + h(p.second) != *hl) return false;
               }
             }
             return true;
           }));
  t.record("abelian.form_total",
           safely([&] { return aggregate_bracket(s, a, b).sum.coefficient_sum() == aggregate_form(s, a, b).sum; }));
}

void check_homotopy_invariance(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                               std::size_t moves, Rng& rng, CheckTally& t) {
  Outputs before;
  if (!safely([&] {
        before = star_outputs(s, a, b);
        return true;
      })) {
    t.record("homotopy.setup", false);
    return;
  }
  CombinatorialLoop x = a, y = b;
  std::bernoulli_distribution which(0.5);
  bool moved = safely([&] {
    for (std::size_t k = 0; k < moves; ++k) {
      CombinatorialLoop& target = which(rng) ? x : y;
      const CombinatorialLoop& other = &target == &x ? y : x;
      const Move m = random_move(s, target, rng, std::span(&other, 1));
      target = apply_move(s, target, m, std::span(&other, 1));
    }
    return positions_disjoint(x, y);
  });
  t.record("homotopy.moves_valid", moved);
  if (!moved) return;
  Outputs after;
  const bool computed = safely([&] {
    after = star_outputs(s, x, y);
    return true;
  });
  t.record("homotopy.class", computed && after.class_a == before.class_a && after.class_b == before.class_b);
  t.record("homotopy.form", computed && after.form == before.form);
  t.record("homotopy.bracket", computed && after.bracket == before.bracket);
  t.record("homotopy.cobracket",
           computed && after.cobracket_a == before.cobracket_a && after.cobracket_b == before.cobracket_b);
}

GeneratorSet parse_surface_name(const std::string& name) {
  static const std::regex pattern(R"(g(\d+)b(\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw InvalidInput("surface names look like g1b1 (genus 1, 1 boundary circle)");
  return canonical_surface(std::stoi(m[1]), std::stoi(m[2]));
}

namespace {

CheckTally pair_checks(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                       std::uint64_t stream, const PropertyOptions& opt) {
  CheckTally t;
  Rng rng(stream);
  check_method_agreement(s, a, b, t, opt);
  check_omega_independence(s, a, b, rng, t, opt);
  check_identities(s, a, b, rng, t, opt);
  check_evenness(s, a, b, t, opt);
  check_abelian_shadows(s, a, b, t);
  return t;
}

// Greedy shrinking: drop runs of transits while the loop stays valid and the pair still fails.
std::pair<CombinatorialLoop, CombinatorialLoop> shrink(const StarFilledSurface& s, CombinatorialLoop a,
                                                       CombinatorialLoop b, std::uint64_t stream,
                                                       const PropertyOptions& opt) {
  auto fails = [&](const CombinatorialLoop& x, const CombinatorialLoop& y) {
    return !pair_checks(s, x, y, stream, opt).ok();
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (int which = 0; which < 2 && !progress; ++which) {
      CombinatorialLoop& target = which == 0 ? a : b;
      const std::size_t n = target.transits.size();
      for (std::size_t len = n; len >= 1 && !progress; --len) {
        for (std::size_t start = 0; start + len <= n && !progress; ++start) {
          CombinatorialLoop c = target;
          c.transits.erase(c.transits.begin() + static_cast<std::ptrdiff_t>(start),
                           c.transits.begin() + static_cast<std::ptrdiff_t>(start + len));
          if (c.transits.empty()) c.anchor_region = s.gate_region(entry_gate(s, target.transits[start]));
          if (!validate_loop(s, c).valid()) continue;
          const bool still = which == 0 ? fails(c, b) : fails(a, c);
          if (still) {
            target = std::move(c);
            progress = true;
          }
        }
      }
    }
  }
  return {a, b};
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& opt) {
  const GeneratorSet gens = parse_surface_name(opt.surface);
  const StarFilledSurface& s = gens.surface;
  PropertyOptions popt;
  popt.expand.swap_prime_order = opt.inject_bug;

  FuzzReport report;
  json_io::Json counterexample = nullptr;
  for (std::size_t i = 0; i < opt.pairs; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    const CombinatorialLoop a = random_loop(s, rng, opt.max_transits);
    const CombinatorialLoop b = random_loop(s, rng, opt.max_transits, std::span(&a, 1));
    const std::uint64_t stream = rng();
    CheckTally t = pair_checks(s, a, b, stream, popt);
    if (opt.moves > 0) check_homotopy_invariance(s, a, b, opt.moves, rng, t);
    if (!t.ok() && counterexample.is_null()) {
      const auto [sa, sb] = shrink(s, a, b, stream, popt);
      const CheckTally st = pair_checks(s, sa, sb, stream, popt);
      json_io::Json failed = json_io::Json::array();
      for (const auto& [k, v] : (st.ok() ? t : st).failed) failed.push_back(k);
      counterexample = {{"pair", i},
                        {"failed", failed},
                        {"a", json_io::to_json(sa, s)},
                        {"b", json_io::to_json(sb, s)}};
    }
    report.tally.merge(t);
  }
  auto& j = report.json;
  j["surface"] = opt.surface;
  j["seed"] = opt.seed;
  j["pairs"] = opt.pairs;
  j["moves"] = opt.moves;
  j["inject_bug"] = opt.inject_bug;
  j["checks"] = report.tally.passed;
  j["failures"] = report.tally.failed;
  j["passed"] = report.tally.total_passed();
  j["failed"] = report.tally.total_failed();
  j["ok"] = report.ok();
  j["counterexample"] = counterexample;
  return report;
}

}  // namespace loopcalc
