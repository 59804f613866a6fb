// Copyright 2026 The pegcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pegcalc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pegcalc/gleason.hpp"
#include "pegcalc/random.hpp"

namespace pegcalc {

namespace {

struct Ctx {
  const ScenarioFile& f;
  const RunOptions& opt;
  std::uint64_t seed;
  OrderRelation order;

  Ctx(const ScenarioFile& file, const RunOptions& o)
      : f(file), opt(o), seed(o.seed.value_or(file.scenario.seed())), order(order_by_name(o.order.value_or(file.order))) {}

  const Scenario& s() const { return f.scenario; }
  double tol(double fallback) const { return opt.tol.value_or(fallback); }
  std::string subject(const std::string& label) const { return f.name + "/" + label; }
  // Independent stream per check so results do not depend on check order.
  Rng rng(const std::string& check) const { return Rng(seed).fork(fnv1a(check)); }
};

Record with_subject(Record r, std::string subject) {
  r.subject = std::move(subject);
  return r;
}

HomogeneousHistory sample_history(const Scenario& s, Rng& rng) {
  const std::size_t d = s.base_dim();
  std::vector<HistoryStep> steps;
  for (const double t : s.times()) steps.push_back({t, random_projector(d, rng.uniform_index(0, d), rng)});
  return HomogeneousHistory(d, std::move(steps));
}

// Index of the only non-identity step, or n if there is none; nullopt when
// more than one time is resolved.
std::optional<std::size_t> single_resolved_time(const HomogeneousHistory& h) {
  const auto n = static_cast<Eigen::Index>(h.base_dim());
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  std::optional<std::size_t> slot = h.length();
  for (std::size_t k = 0; k < h.length(); ++k) {
    if ((h.projector(k) - id).norm() > kStructuralTol) {
      if (*slot != h.length()) return std::nullopt;
      slot = k;
    }
  }
  return slot;
}

double born_residual(const HomogeneousHistory& h, const Scenario& s, std::size_t slot) {
  const Complex p = peg(h, s).value;
  Complex expected = 1.0;
  if (slot < h.length()) expected = (heisenberg_projectors(h, s.dynamics())[slot] * s.rho()).trace();
  double res = std::abs(p - expected);
  res = std::max({res, std::abs(p.imag()), -p.real(), p.real() - 1.0});
  return res;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void add_peg(const Ctx& c, Report& r) {
  const Scenario& s = c.s();
  for (std::size_t i = 0; i < s.histories().size(); ++i) {
    const HomogeneousHistory& h = s.histories()[i];
    const std::string subj = c.subject(c.f.history_labels[i]);
    const Complex p = peg(h, s).value;
    Record v = with_subject(diagnostic("peg", "peg-value"), subj);
    v.value = p;
    v.detail = std::string("unit-constraint ") + (unit_constraint(p, c.order) ? "holds" : "fails") + " under " +
               c.order.name();
    r.add(std::move(v));
    r.add(with_subject(asserted("conjugation", "temporal-reversal-conjugation",
                                std::abs(std::conj(p) - reversed_peg(h, s).value), c.tol(1e-10)),
                       subj));
    if (const auto slot = single_resolved_time(h)) {
      r.add(with_subject(asserted("born-rule", "single-time-born-rule", born_residual(h, s, *slot), c.tol(1e-12)),
                         subj));
    }
  }
  const Complex unit = peg(HomogeneousHistory::unit(s.base_dim(), s.times()), s).value;
  Record n = with_subject(asserted("normalisation", "normalisation", std::abs(unit - 1.0), c.tol(1e-12)),
                          c.subject("unit"));
  n.value = unit;
  r.add(std::move(n));
}

void add_conditions(const Ctx& c, Report& r, const GleasonOperator& y, const std::string& prefix, bool bare_asserted) {
  const auto tc = verify_theorem_conditions(y, c.tol(kTheoremTol));
  const std::string subj = c.subject(prefix);
  r.add(with_subject(asserted(prefix + "-condition-a", "conjugation-symmetry", tc.residual_a, tc.tol), subj));
  r.add(with_subject(asserted(prefix + "-condition-b", "unit-trace", tc.residual_b, tc.tol), subj));
  if (y.picture == Picture::schrodinger) {
    Record bare = bare_asserted ? asserted(prefix + "-condition-a-bare", "conjugation-symmetry-bare-M",
                                           tc.residual_a_bare, tc.tol)
                                : diagnostic(prefix + "-condition-a-bare", "conjugation-symmetry-bare-M");
    bare.residual = tc.residual_a_bare;
    if (!bare_asserted) {
      bare.detail = "slot reversal without the dynamics dressing; holds only for trivial dynamics";
    }
    r.add(with_subject(std::move(bare), subj));
  }
  Rng rng = c.rng(prefix + "-conjugation");
  const auto cc = check_conjugation_consequence(y, rng, c.opt.samples, c.tol(kTheoremTol));
  r.add(with_subject(asserted(prefix + "-conjugation", "reversed-projector-conjugation", cc.max_residual, cc.tol), subj));
}

void add_gleason(const Ctx& c, Report& r) {
  const Scenario& s = c.s();
  const GleasonOperator y = build_Y(s);
  const GleasonOperator z = build_Z(s);

  std::vector<HomogeneousHistory> hs = s.histories();
  Rng hrng = c.rng("form-histories");
  for (std::size_t k = 0; k < c.opt.samples; ++k) hs.push_back(sample_history(s, hrng));
  double res_y = 0.0;
  double res_z = 0.0;
  for (const auto& h : hs) {
    const Complex p = peg(h, s).value;
    res_y = std::max(res_y, std::abs(p - peg_via_Y(heisenberg_history_projector(h, s.dynamics()), y).value));
    res_z = std::max(res_z, std::abs(p - peg_via_Y(history_projector(h), z).value));
  }
  r.add(with_subject(asserted("Y-form", "Y-form", res_y, c.tol(1e-10)), c.subject("Y")));
  r.add(with_subject(asserted("Z-form", "Z-form", res_z, c.tol(1e-10)), c.subject("Z")));

  add_conditions(c, r, y, "Y", false);
  add_conditions(c, r, z, "Z", s.dynamics().is_identity());

  const auto dims = s.history_dims();
  try {
    const auto rec = reconstruct_Y(AssignmentOracle::from_operator(y), dims, c.rng("reconstruction").next_u64(),
                                   c.opt.samples, c.tol(kReconstructionTol));
    Record rr = asserted("reconstruction", "assignment-to-operator", (rec.y.matrix - y.matrix).norm(),
                         c.tol(kReconstructionTol));
    rr.detail = "oracle calls " + std::to_string(rec.oracle_calls);
    if (!rec.warnings.empty()) rr.detail += "; " + join(rec.warnings, "; ");
    r.add(with_subject(std::move(rr), c.subject("Y")));
  } catch (const ReconstructionError& e) {
    Record rr = asserted("reconstruction", "assignment-to-operator", e.residual(), c.tol(kReconstructionTol));
    rr.status = Status::fail;
    rr.detail = e.what();
    r.add(with_subject(std::move(rr), c.subject("Y")));
  }

  const auto dec = decompose_states(y);
  r.add(with_subject(asserted("decomposition-roundtrip", "two-state-decomposition", (dec.recombine() - y.matrix).norm(),
                              c.tol(1e-9)),
                     c.subject("Y")));
  double floor = 0.0;
  for (const ComplexMatrix* rho : {&dec.rho1, &dec.rho2}) {
    floor = std::max(floor, -hermitian_eigenvalues(*rho).minCoeff());
    floor = std::max(floor, std::abs(rho->trace() - 1.0));
  }
  r.add(with_subject(asserted("decomposition-states", "two-state-decomposition", floor, c.tol(1e-10)), c.subject("Y")));
  Rng brng = c.rng("decomposition-bounds");
  const auto b = sample_state_bounds(dec, y, brng, 2 * c.opt.samples);
  const double excess = std::max({0.0, -b.real_min, b.real_max - 1.0, -b.imag_min, b.imag_max - 1.0});
  r.add(with_subject(asserted("decomposition-bounds", "state-value-bounds", excess, c.tol(1e-9)), c.subject("Y")));

  if (c.f.candidate_y) {
    const GleasonOperator cand = GleasonOperator::heisenberg(*c.f.candidate_y, dims);
    add_conditions(c, r, cand, "candidate", false);
    try {
      const auto rec = reconstruct_Y(AssignmentOracle::from_operator(cand), dims,
                                     c.rng("candidate-reconstruction").next_u64(), c.opt.samples,
                                     c.tol(kReconstructionTol));
      r.add(with_subject(asserted("candidate-reconstruction", "assignment-to-operator",
                                  (rec.y.matrix - cand.matrix).norm(), c.tol(kReconstructionTol)),
                         c.subject("candidate")));
    } catch (const ReconstructionError& e) {
      Record rr = asserted("candidate-reconstruction", "assignment-to-operator", e.residual(), c.tol(kReconstructionTol));
      rr.status = Status::fail;
      r.add(with_subject(std::move(rr), c.subject("candidate")));
    }
  }
}

std::vector<Complex> family_pegs(const HistoryFamily& fam, const Scenario& s) {
  std::vector<Complex> out;
  for (const auto& m : fam.members()) out.push_back(peg(m, s).value);
  return out;
}

std::string counts_detail(const std::vector<int>& k) {
  std::ostringstream out;
  out << "branch counts [";
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  out << "]";
  return out.str();
}

void add_entropy(const Ctx& c, Report& r) {
  const Scenario& s = c.s();
  const auto& fams = c.f.families;
  for (const auto& fam : fams) {
    const PegDistribution p(family_pegs(fam.family, s), true);
    Record e = with_subject(diagnostic("entropy", "complex-entropy"), c.subject(fam.label));
    e.value = peg_entropy(p, c.f.k_s).value;
    r.add(std::move(e));
  }

  std::vector<GroupingSpec> groupings = c.f.groupings;
  if (groupings.empty()) {
    for (std::size_t i = 0; i < fams.size(); ++i) {
      GroupingSpec g{i, {}};
      for (std::size_t m = 0; m < fams[i].family.size(); ++m) g.grouping.assignment.push_back(m / 2);
      groupings.push_back(std::move(g));
    }
  }
  for (std::size_t gi = 0; gi < groupings.size(); ++gi) {
    const auto& g = groupings[gi];
    const std::string subj = c.subject(fams[g.family].label + "#grouping" + std::to_string(gi));
    const PegDistribution p(family_pegs(fams[g.family].family, s), true);
    try {
      const auto rep = grouping_check(p, g.grouping, c.f.k_s, c.tol(kEntropyTol));
      Record rec = asserted("grouping", "grouping-with-branch-correction", rep.excess(), rep.tol);
      rec.value = rep.residual;
      rec.detail = counts_detail(rep.branch_counts);
      r.add(with_subject(std::move(rec), subj));
    } catch (const std::domain_error& e) {
      Record rec = diagnostic("grouping", "grouping-with-branch-correction");
      rec.detail = std::string("skipped: ") + e.what();
      r.add(with_subject(std::move(rec), subj));
    }
  }

  for (std::size_t i = 0; i < fams.size(); ++i) {
    for (std::size_t j = 0; j < fams.size(); ++j) {
      if (i == j) continue;
      const std::string subj = c.subject(fams[i].label + "|" + fams[j].label);
      const auto& a = fams[i].family.members();
      const auto& b = fams[j].family.members();
      try {
        if (i < j) {
          const auto rep = strong_additivity_check(a, b, s, c.f.k_s, c.tol(kEntropyTol));
          Record rec = rep.commuting ? asserted("strong-additivity", "strong-additivity", rep.excess(), rep.tol)
                                     : diagnostic("strong-additivity", "strong-additivity");
          rec.residual = rep.excess();
          rec.value = rep.residual;
          if (!rep.commuting) rec.detail = "non-commuting families; reported, not asserted";
          r.add(with_subject(std::move(rec), subj));
        }
        const auto cv = concavity_check(a, b, s, c.order, c.f.k_s);
        Record rec = diagnostic("concavity", "conditioning-reduces-entropy");
        rec.value = cv.conditional;
        rec.detail = std::string(to_string(cv.verdict)) + " under " + c.order.name() +
                     (cv.commuting ? "" : "; non-commuting");
        r.add(with_subject(std::move(rec), subj));
      } catch (const std::domain_error& e) {
        Record rec = diagnostic(i < j ? "strong-additivity" : "concavity", "conditional-entropy");
        rec.detail = std::string("skipped: ") + e.what();
        r.add(with_subject(std::move(rec), subj));
      }
    }
  }
}

void add_compare(const Ctx& c, Report& r) {
  const Scenario& s = c.s();
  const GleasonOperator y = build_Y(s);
  const double tol = c.tol(kFamilyTol);
  for (const auto& fs : c.f.families) {
    const HistoryFamily& fam = fs.family;
    const std::string subj = c.subject(fs.label);
    const ComplexMatrix d = decoherence_matrix(fam, s);
    r.add(with_subject(asserted("decoherence-normalisation", "decoherence-functional",
                                std::max(std::abs(d.sum() - 1.0), (d - d.adjoint()).norm()), c.tol(1e-10)),
                       subj));

    double off = 0.0;
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        if (i != j) off = std::max(off, std::abs(d(i, j).real()));
      }
    }
    const bool consistent = is_consistent(fam, s, tol);
    Record cons = diagnostic("consistency", "weak-consistency");
    cons.residual = off;
    cons.tolerance = tol;
    cons.detail = consistent ? "consistent" : "inconsistent";
    r.add(with_subject(std::move(cons), subj));

    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& m : fam.members()) min_re = std::min(min_re, peg(m, s).real());
    Record lp = diagnostic("linear-positivity", "linear-positivity");
    lp.residual = min_re;
    lp.detail = is_linearly_positive(fam, s, tol) ? "linearly positive" : "not linearly positive";
    r.add(with_subject(std::move(lp), subj));

    const double neg = std::max(0.0, -min_re);
    Record imp = consistent ? asserted("consistency-implies-positivity", "consistency-implies-positivity", neg, tol)
                            : diagnostic("consistency-implies-positivity", "consistency-implies-positivity");
    imp.residual = neg;
    r.add(with_subject(std::move(imp), subj));

    const auto cr = classical_reduction_check(fam, s, tol);
    const double gap = std::max(cr.max_diagonal_gap, cr.sum_gap);
    Record red = consistent ? asserted("classical-reduction", "classical-reduction", gap, tol)
                            : diagnostic("classical-reduction", "classical-reduction");
    red.residual = gap;
    if (!consistent) red.detail = "inconsistent family; reported, not asserted";
    r.add(with_subject(std::move(red), subj));

    bool single = true;
    double born = 0.0;
    for (const auto& m : fam.members()) {
      const auto slot = single_resolved_time(m);
      if (!slot) {
        single = false;
        break;
      }
      born = std::max(born, born_residual(m, s, *slot));
    }
    if (single) r.add(with_subject(asserted("single-time-born", "single-time-born-rule", born, c.tol(1e-12)), subj));

    std::vector<HistoryProjector> hp = heisenberg_family(fam.members(), s.dynamics());
    std::vector<std::pair<HistoryProjector, HistoryProjector>> pairs;
    for (std::size_t i = 0; i < hp.size() && pairs.size() < 60; ++i) {
      for (std::size_t j = 0; j < hp.size() && pairs.size() < 60; ++j) {
        if (i == j) continue;
        pairs.emplace_back(hp[i], HistoryProjector(hp[i].matrix() + hp[j].matrix(), hp[i].dims()));
      }
    }
    if (!pairs.empty()) {
      const auto mono = monotonicity_audit(pairs, y, c.order);
      const double bad = static_cast<double>(mono.fails + mono.incomparable);
      Record mr = mono.classical ? asserted("monotonicity", "monotonicity", bad, 0.0)
                                 : diagnostic("monotonicity", "monotonicity");
      mr.residual = bad;
      mr.detail = "holds " + std::to_string(mono.holds) + ", fails " + std::to_string(mono.fails) + ", incomparable " +
                  std::to_string(mono.incomparable) + " under " + c.order.name() +
                  (mono.classical ? "" : "; non-classical pegs, reported only");
      r.add(with_subject(std::move(mr), subj));
    }
  }
}

void add_battery(const Ctx& c, Report& r) {
  const Scenario& s = c.s();
  const std::size_t d = s.base_dim();
  const std::size_t n = s.n_times();
  const std::size_t samples = c.opt.samples;

  Rng trng = c.rng("trace-identity");
  double tres = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<ComplexMatrix> ms;
    const std::size_t count = trng.uniform_index(2, 4);
    for (std::size_t i = 0; i < count; ++i) ms.push_back(random_hermitian(d, trng));
    tres = std::max(tres, trace_identity_residual(ms));
  }
  r.add(with_subject(asserted("trace-identity", "cyclic-shift-trace", tres, c.tol(1e-10)), c.subject("sampled")));

  Rng arng = c.rng("additivity");
  double ares = 0.0;
  for (std::size_t k = 0; k < samples && d >= 2; ++k) {
    const HomogeneousHistory h = sample_history(s, arng);
    const std::size_t slot = arng.uniform_index(0, n - 1);
    const ComplexMatrix u = random_unitary(d, arng);
    const auto cut = static_cast<Eigen::Index>(arng.uniform_index(1, d - 1));
    const auto rest = static_cast<Eigen::Index>(d) - cut;
    const ComplexMatrix pa = u.leftCols(cut) * u.leftCols(cut).adjoint();
    const ComplexMatrix pb = u.rightCols(rest) * u.rightCols(rest).adjoint();
    const Complex whole = peg(h.with_projector(slot, pa + pb), s).value;
    ares = std::max(ares, std::abs(whole - peg(h.with_projector(slot, pa), s).value -
                                   peg(h.with_projector(slot, pb), s).value));
  }
  r.add(with_subject(asserted("additivity", "additivity-orthogonal-slot", ares, c.tol(1e-10)), c.subject("sampled")));

  Rng crng = c.rng("conjugation-sampled");
  double cres = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const HomogeneousHistory h = sample_history(s, crng);
    cres = std::max(cres, std::abs(std::conj(peg(h, s).value) - reversed_peg(h, s).value));
  }
  r.add(with_subject(asserted("conjugation-sampled", "temporal-reversal-conjugation", cres, c.tol(1e-10)),
                     c.subject("sampled")));

  // Order laws on points clustered on a few flux lines.
  Rng orng = c.rng("order-laws");
  std::vector<Complex> pts{0.0, 1.0};
  for (std::size_t k = 0; k < 2 * samples; ++k) {
    const Complex center(0.5, static_cast<double>(orng.uniform_index(0, 4)) - 2.0);
    pts.push_back(center + std::abs(center) * std::polar(1.0, 2.0 * std::numbers::pi * orng.uniform()));
  }
  double violations = 0.0;
  for (std::size_t k = 0; k < 20 * samples; ++k) {
    const Complex a = pts[orng.uniform_index(0, pts.size() - 1)];
    const Complex b = pts[orng.uniform_index(0, pts.size() - 1)];
    const Complex e = pts[orng.uniform_index(0, pts.size() - 1)];
    if (!c.order.leq(a, a)) ++violations;
    if (c.order.leq(a, b) && c.order.leq(b, a) && std::abs(a - b) > c.order.tol()) ++violations;
    if (c.order.leq(a, b) && c.order.leq(b, e) && !c.order.leq(a, e)) ++violations;
    if (std::abs(a.imag()) > 1e-6 && c.order.comparable(a, std::conj(a))) ++violations;
  }
  r.add(with_subject(asserted("order-laws", "partial-order-laws", violations, 0.0), c.subject(c.order.name())));
}

using Section = void (*)(const Ctx&, Report&);

Report run(const char* name, const ScenarioFile& f, const RunOptions& opt, std::initializer_list<Section> sections) {
  Report r(name);
  const Ctx c(f, opt);
  for (const Section s : sections) s(c, r);
  r.stamp(f.digest, c.seed);
  r.sort();
  return r;
}

}  // namespace

Report cmd_peg(const ScenarioFile& f, const RunOptions& opt) { return run("peg", f, opt, {add_peg}); }
Report cmd_gleason(const ScenarioFile& f, const RunOptions& opt) { return run("gleason", f, opt, {add_gleason}); }
Report cmd_entropy(const ScenarioFile& f, const RunOptions& opt) { return run("entropy", f, opt, {add_entropy}); }
Report cmd_compare(const ScenarioFile& f, const RunOptions& opt) { return run("compare", f, opt, {add_compare}); }

Report cmd_suite(const std::vector<ScenarioFile>& files, const RunOptions& opt) {
  Report out("suite");
  for (const auto& f : files) {
    out.append(run("suite", f, opt, {add_peg, add_gleason, add_entropy, add_compare, add_battery}));
  }
  out.sort();
  return out;
}

std::vector<ScenarioFile> random_scenarios(std::size_t n, std::uint64_t seed) {
  std::vector<ScenarioFile> out;
  const Rng root(seed);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(random_scenario_file(root.fork(i).next_u64(), "random-" + std::to_string(i)));
  }
  return out;
}

}  // namespace pegcalc
