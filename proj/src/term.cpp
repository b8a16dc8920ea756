#include "licterm/term.hpp"

namespace licterm {

namespace {

constexpr std::array<TermInfo, kTermCount> kCatalog{{
    {Term::Distribute, TermKind::Right, "distribute", "Distribute",
     "Convey copies of the original or derivative work to others."},
    {Term::Modify, TermKind::Right, "modify", "Modify",
     "Change the work and create derivative works from it."},
    {Term::CommercialUse, TermKind::Right, "commercial-use", "Commercial Use",
     "Use the work for commercial purposes, including selling it."},
    {Term::PrivateUse, TermKind::Right, "private-use", "Private Use",
     "Use or modify the work privately without distributing it."},
    {Term::HoldLiable, TermKind::Right, "hold-liable", "Hold Liable",
     "Hold the licensor responsible for damages caused by the work."},
    {Term::PlaceWarranty, TermKind::Right, "place-warranty", "Place Warranty",
     "Rely on or attach a warranty to the work."},
    {Term::UseTrademark, TermKind::Right, "use-trademark", "Use Trademark",
     "Use the licensor's trademarks, contributor names, or logos."},
    {Term::UsePatentClaims, TermKind::Right, "use-patent-claims", "Use Patent Claims",
     "Practice patent claims of contributors that read on the work."},
    {Term::Sublicense, TermKind::Right, "sublicense", "Sublicense",
     "Grant the licensed rights to third parties."},
    {Term::Relicense, TermKind::Right, "relicense", "Relicense",
     "Distribute the work under a different license."},
    {Term::StaticallyLink, TermKind::Right, "statically-link", "Statically Link",
     "Link the work statically into another program."},
    {Term::IncludeCopyright, TermKind::Obligation, "include-copyright", "Include Copyright",
     "Retain the copyright notice in copies of the work."},
    {Term::IncludeLicense, TermKind::Obligation, "include-license", "Include License",
     "Ship the full license text with copies of the work."},
    {Term::IncludeNotice, TermKind::Obligation, "include-notice", "Include Notice",
     "Ship the notice file or attribution notices with the work."},
    {Term::IncludeOriginal, TermKind::Obligation, "include-original", "Include Original",
     "Ship the unmodified original, or instructions to obtain it, with changed copies."},
    {Term::IncludeInstallInstructions, TermKind::Obligation, "include-install-instructions",
     "Include Install Instructions", "Ship instructions for installing modified versions."},
    {Term::DiscloseSource, TermKind::Obligation, "disclose-source", "Disclose Source",
     "Make the source code available when distributing the work."},
    {Term::StateChanges, TermKind::Obligation, "state-changes", "State Changes",
     "Mark or document changes made to the work."},
    {Term::GiveCredit, TermKind::Obligation, "give-credit", "Give Credit",
     "Credit the original authors in a reasonable manner."},
    {Term::Rename, TermKind::Obligation, "rename", "Rename",
     "Use a different name for modified versions of the work."},
    {Term::ContactAuthor, TermKind::Obligation, "contact-author", "Contact Author",
     "Ask the author for permission for uses beyond the grant."},
    {Term::CompensateForDamages, TermKind::Obligation, "compensate-for-damages",
     "Compensate for Damages", "Indemnify the licensor for damages caused by the licensee."},
}};

static_assert([] {
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (index_of(kCatalog[i].term) != i) return false;
    if (kCatalog[i].kind != kind_of(kCatalog[i].term)) return false;
  }
  return true;
}());

}  // namespace

std::span<const TermInfo, kTermCount> term_catalog() noexcept { return kCatalog; }

std::string_view to_string(Term t) noexcept { return kCatalog[index_of(t)].id; }

std::string_view to_string(TermKind k) noexcept {
  return k == TermKind::Right ? "right" : "obligation";
}

std::string_view to_string(Attitude a) noexcept {
  switch (a) {
    case Attitude::Can:
      return "can";
    case Attitude::Cannot:
      return "cannot";
    case Attitude::Must:
      return "must";
    case Attitude::NotMentioned:
      return "not-mentioned";
  }
  return "?";
}

std::string_view to_string(CopyleftClass c) noexcept {
  switch (c) {
    case CopyleftClass::None:
      return "none";
    case CopyleftClass::Weak:
      return "weak";
    case CopyleftClass::Strong:
      return "strong";
  }
  return "?";
}

std::optional<Term> parse_term(std::string_view id) noexcept {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info.term;
  }
  return std::nullopt;
}

std::optional<Attitude> parse_attitude(std::string_view s) noexcept {
  if (s == "can") return Attitude::Can;
  if (s == "cannot") return Attitude::Cannot;
  if (s == "must") return Attitude::Must;
  if (s == "not-mentioned") return Attitude::NotMentioned;
  return std::nullopt;
}

std::optional<CopyleftClass> parse_copyleft(std::string_view s) noexcept {
  if (s == "none") return CopyleftClass::None;
  if (s == "weak") return CopyleftClass::Weak;
  if (s == "strong") return CopyleftClass::Strong;
  return std::nullopt;
}

}  // namespace licterm
