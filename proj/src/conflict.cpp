#include "licterm/conflict.hpp"

#include <algorithm>
#include <tuple>

namespace licterm {

std::string_view to_string(ConflictType t) noexcept {
  switch (t) {
    case ConflictType::C1:
      return "C1";
    case ConflictType::C2:
      return "C2";
    case ConflictType::C3:
      return "C3";
  }
  return "?";
}

namespace {

bool c1_fires(Attitude parent, Attitude dep, const RuleOptions& opts) noexcept {
  if (parent != Attitude::Can) return false;
  return dep == Attitude::Cannot || (opts.strict_not_mentioned && dep == Attitude::NotMentioned);
}

bool c2_fires(Attitude parent, Attitude dep) noexcept {
  return parent == Attitude::NotMentioned && dep == Attitude::Must;
}

bool c3_fires(Attitude parent, Attitude dep, CopyleftClass dep_copyleft,
              const RuleOptions& opts) noexcept {
  if (dep_copyleft == CopyleftClass::None || dep != Attitude::Can) return false;
  return opts.c3 == C3Reading::Broad ? parent != Attitude::Can : parent == Attitude::Cannot;
}

template <typename OnFinding>
void run_rules(const LicenseProfile& parent, const LicenseProfile& dep, const RuleOptions& opts,
               OnFinding&& on) {
  // C1 and C3 over rights, C2 over obligations; the loops are split by type so
  // that emission order is type-major.
  for (std::size_t i = 0; i < kRightCount; ++i) {
    const Term t = term_at(i);
    if (c1_fires(parent.terms.at(t), dep.terms.at(t), opts)) on(ConflictType::C1, t);
  }
  for (std::size_t i = kRightCount; i < kTermCount; ++i) {
    const Term t = term_at(i);
    if (c2_fires(parent.terms.at(t), dep.terms.at(t))) on(ConflictType::C2, t);
  }
  if (dep.copyleft == CopyleftClass::None) return;
  for (std::size_t i = 0; i < kRightCount; ++i) {
    const Term t = term_at(i);
    if (c3_fires(parent.terms.at(t), dep.terms.at(t), dep.copyleft, opts)) {
      on(ConflictType::C3, t);
    }
  }
}

auto finding_order(const ConflictFinding& f) {
  return std::tie(f.ctype, f.term, f.parent_id, f.dep_id);
}

}  // namespace

std::vector<ConflictFinding> check_profiles(const LicenseProfile& parent, const LicenseProfile& dep,
                                            const RuleOptions& opts) {
  std::vector<ConflictFinding> out;
  run_rules(parent, dep, opts, [&](ConflictType ct, Term t) {
    out.push_back({ct, t, parent.spdx_id, dep.spdx_id, parent.terms.at(t), dep.terms.at(t)});
  });
  return out;
}

std::uint8_t conflict_type_mask(const LicenseProfile& parent, const LicenseProfile& dep,
                                const RuleOptions& opts) noexcept {
  std::uint8_t mask = 0;
  run_rules(parent, dep, opts,
            [&](ConflictType ct, Term) { mask |= std::uint8_t(1u << static_cast<unsigned>(ct)); });
  return mask;
}

ExpressionVerdict check_expressions(const LicenseExpression& parent, const LicenseExpression& dep,
                                    const Dataset& ds, const RuleOptions& opts) {
  ExpressionVerdict verdict;

  auto note_refs = [&](const LicenseExpression& e) {
    for (const auto& r : e.refs()) {
      if (lookup(ds, r.id) == nullptr &&
          std::find(verdict.unknown_licenses.begin(), verdict.unknown_licenses.end(), r.id) ==
              verdict.unknown_licenses.end()) {
        verdict.unknown_licenses.push_back(r.id);
        verdict.warnings.push_back("license " + r.id +
                                   " is not in the dataset; treated as conflict free");
      }
      if (r.exception) {
        verdict.warnings.push_back("exception " + *r.exception + " on " + r.id +
                                   " is carried through; it does not change the base terms");
      }
      if (r.or_later) {
        verdict.warnings.push_back("or-later suffix on " + r.id +
                                   " is carried through; terms of " + r.id + " are used");
      }
    }
  };
  note_refs(parent);
  note_refs(dep);

  const auto parent_alts = alternatives(parent);
  const auto dep_alts = alternatives(dep);

  bool have_best = false;
  for (const auto& pa : parent_alts) {
    for (const auto& da : dep_alts) {
      std::vector<ConflictFinding> found;
      for (const auto& pr : pa) {
        const auto* pp = lookup(ds, pr.id);
        if (pp == nullptr) continue;
        for (const auto& dr : da) {
          const auto* dp = lookup(ds, dr.id);
          if (dp == nullptr) continue;
          auto f = check_profiles(*pp, *dp, opts);
          found.insert(found.end(), std::make_move_iterator(f.begin()),
                       std::make_move_iterator(f.end()));
        }
      }
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return finding_order(a) < finding_order(b); });
      found.erase(std::unique(found.begin(), found.end()), found.end());

      if (!have_best || found.size() < verdict.findings.size()) {
        have_best = true;
        verdict.findings = std::move(found);
        verdict.parent_choice = pa;
        verdict.dep_choice = da;
      }
      if (verdict.findings.empty()) break;
    }
    if (have_best && verdict.findings.empty()) break;
  }
  verdict.conflict_free = verdict.findings.empty();

  for (const auto& pr : verdict.parent_choice) {
    const auto* pp = lookup(ds, pr.id);
    if (pp == nullptr || pp->copyleft == CopyleftClass::None) continue;
    for (const auto& dr : verdict.dep_choice) {
      const auto* dp = lookup(ds, dr.id);
      if (dp == nullptr || dp->copyleft == CopyleftClass::None || dr.id == pr.id) continue;
      verdict.warnings.push_back("both " + pr.id + " (" + std::string(to_string(pp->copyleft)) +
                                 ") and " + dr.id + " (" + std::string(to_string(dp->copyleft)) +
                                 ") are copyleft; same-license propagation between them is "
                                 "not checked");
    }
  }
  return verdict;
}

std::string explain(const ConflictFinding& f) {
  const std::string term(to_string(f.term));
  const std::string pa(to_string(f.parent_attitude));
  const std::string da(to_string(f.dep_attitude));
  const std::string rule(to_string(f.ctype));
  switch (f.ctype) {
    case ConflictType::C1:
      return rule + ": project license " + f.parent_id + " grants " + term + " (" + pa +
             ") but dependency license " + f.dep_id + " does not grant it (" + da + ").";
    case ConflictType::C2:
      return rule + ": dependency license " + f.dep_id + " requires " + term + " (" + da +
             ") but project license " + f.parent_id + " does not (" + pa + ").";
    case ConflictType::C3:
      return rule + ": copyleft dependency license " + f.dep_id + " grants " + term + " (" + da +
             ") but project license " + f.parent_id + " does not preserve it (" + pa + ").";
  }
  return rule;
}

}  // namespace licterm
