#include "hilbert/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "hilbert/adjoint.hpp"
#include "hilbert/closure.hpp"
#include "hilbert/enumeration.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/filters.hpp"
#include "hilbert/monoid.hpp"
#include "hilbert/multipliers.hpp"

namespace hilbert {

namespace {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) fn(i);
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
}

std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(bits);
  return out;
}

std::string pair_str(const Algebra& a, Element x, Element y) { return "(" + a.label(x) + "," + a.label(y) + ")"; }

VerificationReport check_core(const Algebra& a) {
  VerificationReport report;
  const int n = a.size();
  {
    Check c("core/axioms");
    const auto r = validate_hilbert(n, a.one(), a.table());
    for (const auto& v : r.violations) c.fail(v.axiom);
    report.add(c.finish());
  }
  {
    Check c("core/natural-order");
    c.expect(natural_order(a).is_partial_order() && natural_order(a).greatest() == a.one(),
             [] { return std::string("natural order is not a partial order topped by the unit"); });
    for (Element x = 0; x < n; ++x) {
      c.expect(a.imp(a.one(), x) == x && a.imp(x, x) == a.one() && a.leq(a.one(), x) == (x == a.one()),
               [&] { return "x=" + a.label(x); });
      for (Element y = 0; y < n; ++y)
        c.expect(a.imp(x, a.imp(y, x)) == a.one(), [&] { return "weakening " + pair_str(a, x, y); });
    }
    report.add(c.finish());
  }
  {
    Check c("core/compatible-meet-is-meet");
    for (Element x = 0; x < n; ++x) {
      c.expect(compatible_meet(a, x, a.one()) == x, [&] { return pair_str(a, x, a.one()); });
      for (Element y = 0; y < n; ++y) {
        const auto cm = compatible_meet(a, x, y);
        c.expect(!cm || cm == partial_meet(a, x, y), [&] { return pair_str(a, x, y); });
        c.expect(cm.has_value() == is_compatible(a, x, y), [&] { return pair_str(a, x, y); });
      }
    }
    report.add(c.finish());
  }
  {
    // Implicative semilattice: all meets exist and z <= x -> y iff z ∧ x <= y.
    Check c("core/classification");
    bool residuated = true;
    for (Element x = 0; x < n && residuated; ++x)
      for (Element y = 0; y < n && residuated; ++y) {
        const auto m = partial_meet(a, x, y);
        if (!m) {
          residuated = false;
          break;
        }
        for (Element z = 0; z < n; ++z) {
          const auto zx = partial_meet(a, z, x);
          if (!zx || a.leq(z, a.imp(x, y)) != a.leq(*zx, y)) residuated = false;
        }
      }
    bool commutative = true;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) commutative = commutative && a.imp(a.imp(x, y), x) == x;
    const auto cls = classify(a);
    c.expect(cls.implicative_semilattice == residuated, [&] { return "implicative semilattice flag " + std::to_string(cls.implicative_semilattice); });
    c.expect(cls.implication_algebra == commutative, [&] { return "implication algebra flag " + std::to_string(cls.implication_algebra); });
    report.add(c.finish());
  }
  {
    Check c("core/implication-joins-and-bounded-meets");
    if (classify(a).implication_algebra) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          c.expect(partial_join(a, x, y) == a.imp(a.imp(x, y), y), [&] { return "join " + pair_str(a, x, y); });
          if (!(a.down(x) & a.down(y)).empty())
            c.expect(partial_meet(a, x, y).has_value(), [&] { return "meet " + pair_str(a, x, y); });
        }
    } else {
      c.skip("not an implication algebra");
    }
    report.add(c.finish());
  }
  {
    Check c("core/blocks");
    Check from("core/blocks-from-subalgebras");
    for (ElementSet b : all_subsets(n)) {
      if (!is_block(a, b)) continue;
      c.expect(is_subalgebra(a, b), [&] { return format_set(a, b) + " not a subalgebra"; });
      const auto bottom = minimum(a, b);
      c.expect(bottom && block_from(a, b, *bottom) == b, [&] { return format_set(a, b) + " not generated by its least element"; });
      for (Element x : b)
        for (Element y : b) {
          std::optional<Element> block_meet;
          for (Element z : b) {
            const bool lower = a.leq(z, x) && a.leq(z, y);
            bool greatest = lower;
            for (Element w : b)
              if (lower && a.leq(w, x) && a.leq(w, y)) greatest = greatest && a.leq(w, z);
            if (greatest) block_meet = z;
          }
          c.expect(is_compatible(a, x, y) && block_meet && block_meet == partial_meet(a, x, y),
                   [&] { return format_set(a, b) + " " + pair_str(a, x, y); });
        }
    }
    for (ElementSet x : all_subalgebras(a))
      for (Element p : x)
        from.expect(is_block(a, block_from(a, x, p)),
                    [&] { return "X=" + format_set(a, x) + " p=" + a.label(p) + " gives " + format_set(a, block_from(a, x, p)); });
    report.add(c.finish());
    report.add(from.finish());
  }
  return report;
}

VerificationReport check_filters(const Algebra& a) {
  VerificationReport report;
  const FilterLattice fl = all_filters(a);
  const auto& filters = fl.carrier;
  {
    Check c("filters/definitions-agree");
    for (ElementSet s : all_subsets(a.size())) {
      const bool f = is_filter(a, s);
      c.expect(f == is_filter_by_bounds(a, s) && f == is_semilattice_filter(a, s), [&] { return format_set(a, s); });
    }
    report.add(c.finish());
  }
  {
    Check c("filters/closure-matches-brute-force");
    c.expect(filters == all_filters_brute_force(a), [&] { return std::to_string(filters.size()) + " filters by closure"; });
    report.add(c.finish());
  }
  {
    Check c("filters/distributive-lattice");
    std::set<ElementSet> fs(filters.begin(), filters.end());
    for (ElementSet j : filters)
      for (ElementSet k : filters) {
        c.expect(fs.count(j & k) && fs.count(filter_join(a, j, k)), [&] { return format_set(a, j) + " " + format_set(a, k); });
        for (ElementSet l : filters)
          c.expect((j & filter_join(a, k, l)) == filter_join(a, j & k, j & l),
                   [&] { return format_set(a, j) + " " + format_set(a, k) + " " + format_set(a, l); });
      }
    c.expect(fl.lattice.is_distributive(), [] { return std::string("filter lattice not distributive"); });
    report.add(c.finish());
  }
  {
    Check c("filters/upward-closed-alpha-closed");
    for (ElementSet j : filters) {
      bool up = true;
      for (Element x : j) up = up && a.up(x).subset_of(j);
      c.expect(up && is_relative_subsemilattice(a, j) && is_alpha_closed(a, j), [&] { return format_set(a, j); });
    }
    for (Element p = 0; p < a.size(); ++p)
      c.expect(principal_filter(a, p) == a.up(p), [&] { return "[" + a.label(p) + ") is not the up-set"; });
    report.add(c.finish());
  }
  {
    Check c("filters/lower-sets-are-ideals");
    Check m("filters/class-max-equals-lower-set-max");
    for (ElementSet j : filters)
      for (Element x = 0; x < a.size(); ++x) {
        const ElementSet lower = lower_set(a, j, x);
        c.expect(is_ideal(a, lower), [&] { return "J=" + format_set(a, j) + " a=" + a.label(x); });
        m.expect(maximum(a, class_of(a, j, x)) == maximum(a, lower), [&] { return "J=" + format_set(a, j) + " a=" + a.label(x); });
      }
    report.add(c.finish());
    report.add(m.finish());
  }
  {
    Check c("filters/finitely-generated");
    auto fg = finitely_generated_filters(a);
    std::sort(fg.begin(), fg.end());
    auto sorted = filters;
    std::sort(sorted.begin(), sorted.end());
    c.expect(fg == sorted, [&] { return std::to_string(fg.size()) + " finitely generated of " + std::to_string(sorted.size()); });
    report.add(c.finish());
  }
  return report;
}

VerificationReport check_impla(const Algebra& a) {
  VerificationReport r = implication_extras(a);
  r.append(check_impla3(a));
  return r;
}

using SuiteFn = VerificationReport (*)(const Algebra&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"core", check_core},
      {"filters", check_filters},
      {"multipliers", check_multiplier_structure},
      {"multiplier-calculus", check_multiplier_calculus},
      {"ce", check_ce_structure},
      {"isotmult2", check_isotmult2},
      {"idempotent-lemma", check_idempotent_lemma},
      {"kappa", check_kappa},
      {"ff", check_ff},
      {"join-density", check_join_density},
      {"kk2", check_kk2},
      {"compact", check_compact_generation},
      {"brouwerian", check_brouwerian},
      {"bridge", check_filter_ideal_bridge},
      {"impla", check_impla},
      {"fixpoint-characterization", check_fixpoint_filter_characterization},
  };
  return suites;
}

constexpr const char* kCrossSurvey = "cross-survey";

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back(kCrossSurvey);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& suite, const Algebra& a) {
  for (const auto& [name, fn] : registry()) {
    if (name != suite) continue;
    try {
      return fn(a);
    } catch (const PreconditionError& e) {
      Check c(name + "/precondition");
      c.skip(e.what());
      VerificationReport r;
      r.add(c.finish());
      return r;
    } catch (const std::exception& e) {
      Check c(name + "/exception");
      c.fail(e.what());
      VerificationReport r;
      r.add(c.finish());
      return r;
    }
  }
  throw PreconditionError("unknown suite '" + suite + "'");
}

namespace {

struct SurveyData {
  FilterLattice filters;
  Poset adjoint;
  EndoMonoid monoid;
  std::vector<int> ce_indices;
  bool implicative_semilattice = false;
};

SurveyData survey_data(const Algebra& a) {
  SurveyData d{all_filters(a), adjoint_semilattice(a).order, endomorphism_monoid(a), {}, classify(a).implicative_semilattice};
  for (const auto& f : closure_endomorphisms(a)) d.ce_indices.push_back(d.monoid.index_of(f));
  std::sort(d.ce_indices.begin(), d.ce_indices.end());
  return d;
}

struct PairOutcome {
  bool filters = false, adjoint = false, monoid = false, algebra = false;
  bool ce_preserved = true;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

VerificationReport cross_survey(const std::vector<NamedAlgebra>& algebras, int jobs) {
  const std::size_t k = algebras.size();
  std::vector<std::optional<SurveyData>> data(k);
  std::vector<std::string> errors(k);
  parallel_for(k, jobs, [&](std::size_t i) {
    try {
      data[i] = survey_data(algebras[i].algebra);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (data[i] && data[j]) pairs.emplace_back(i, j);
  std::vector<PairOutcome> outcomes(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const SurveyData& x = *data[i];
    const SurveyData& y = *data[j];
    PairOutcome& o = outcomes[p];
    o.filters = isomorphic(x.filters.lattice, y.filters.lattice);
    o.adjoint = x.adjoint.n == y.adjoint.n && order_isomorphism(x.adjoint, y.adjoint).has_value();
    const auto h = monoid_isomorphism(x.monoid, y.monoid);
    o.monoid = h.has_value();
    if (h) {
      std::vector<int> image;
      for (int c : x.ce_indices) image.push_back((*h)[c]);
      std::sort(image.begin(), image.end());
      o.ce_preserved = image == y.ce_indices;
    }
    o.algebra = are_isomorphic(algebras[i].algebra, algebras[j].algebra).has_value();
  });

  VerificationReport report;
  Check setup("cross-survey/structures");
  for (std::size_t i = 0; i < k; ++i)
    if (!errors[i].empty()) setup.fail(algebras[i].name + ": " + errors[i]);
  report.add(setup.finish());

  Check definable("cross-survey/ce-monoid-definable");
  for (std::size_t i = 0; i < k; ++i)
    if (data[i])
      definable.expect(idempotent_stable_elements(data[i]->monoid) == data[i]->ce_indices,
                       [&] { return algebras[i].name; });
  report.add(definable.finish());

  Check fa("cross-survey/filters-iff-adjoint");
  Check ma("cross-survey/monoid-implies-adjoint");
  Check mc("cross-survey/monoid-preserves-ce");
  Check rigid("cross-survey/implicative-semilattice-rigidity");
  Check listing("cross-survey/pairs");
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const PairOutcome& o = outcomes[p];
    const std::string label = algebras[i].name + " ~ " + algebras[j].name;
    fa.expect(o.filters == o.adjoint, [&] { return label + " filters=" + yes_no(o.filters) + " adjoint=" + yes_no(o.adjoint); });
    ma.expect(!o.monoid || o.adjoint, [&] { return label; });
    mc.expect(!o.monoid || o.ce_preserved, [&] { return label; });
    const bool both_isl = data[i]->implicative_semilattice && data[j]->implicative_semilattice;
    if (both_isl) rigid.expect(!o.monoid || o.algebra, [&] { return label; });
  }
  report.add(fa.finish());
  report.add(ma.finish());
  report.add(mc.finish());
  report.add(rigid.finish());
  CheckResult lr = listing.finish();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const PairOutcome& o = outcomes[p];
    std::string line = algebras[i].name + " ~ " + algebras[j].name + ": filters " + yes_no(o.filters) + ", adjoint " +
                       yes_no(o.adjoint) + ", monoid " + yes_no(o.monoid) + ", algebra " + yes_no(o.algebra);
    lr.notes.push_back(std::move(line));
  }
  report.add(std::move(lr));
  return report;
}

namespace {

// Folds one algebra's result into the aggregate for the same check name.
void fold(CheckResult& into, const CheckResult& from, const std::string& algebra_name) {
  constexpr std::size_t kMaxWitnesses = 8;
  switch (from.status) {
    case Status::pass:
      ++into.cases_passed;
      break;
    case Status::fail:
      ++into.cases_failed;
      into.status = Status::fail;
      for (const auto& w : from.witnesses)
        if (into.witnesses.size() < kMaxWitnesses) into.witnesses.push_back(algebra_name + ": " + w);
      break;
    case Status::skipped:
      ++into.cases_skipped;
      if (into.reason.empty()) into.reason = algebra_name + ": " + from.reason;
      break;
  }
  if (into.status != Status::fail) {
    into.status = into.cases_passed > 0 ? Status::pass : Status::skipped;
  }
  for (const auto& n : from.notes) into.notes.push_back(n);
  into.elapsed += from.elapsed;
}

}  // namespace

VerificationReport verify(const std::vector<NamedAlgebra>& algebras, const std::vector<std::string>& suites, int jobs) {
  std::vector<std::string> selected;
  for (const auto& s : suites) {
    if (s == "all") {
      selected = suite_names();
      break;
    }
    if (!is_suite(s)) throw PreconditionError("unknown suite '" + s + "'");
    if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
  }
  const bool survey = std::find(selected.begin(), selected.end(), kCrossSurvey) != selected.end();
  std::erase(selected, std::string(kCrossSurvey));

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t s = 0; s < selected.size(); ++s) tasks.emplace_back(i, s);
  std::vector<VerificationReport> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    results[t] = run_suite(selected[tasks[t].second], algebras[tasks[t].first].algebra);
  });

  // Aggregate by check name in suite order, then first appearance.
  VerificationReport report;
  std::map<std::string, std::size_t> position;
  for (std::size_t s = 0; s < selected.size(); ++s) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].second != s) continue;
      const std::string& name = algebras[tasks[t].first].name;
      for (const auto& c : results[t].checks) {
        auto [it, fresh] = position.emplace(c.name, report.checks.size());
        if (fresh) {
          CheckResult blank;
          blank.name = c.name;
          blank.status = Status::skipped;
          report.checks.push_back(std::move(blank));
        }
        fold(report.checks[it->second], c, name);
      }
    }
  }
  if (survey) report.append(cross_survey(algebras, jobs));
  return report;
}

}  // namespace hilbert
