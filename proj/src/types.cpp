#include "scholarmatch/types.hpp"

namespace scholarmatch {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::SocialBehavioral: return "SocialBehavioral";
    case Domain::LawArtsHumanities: return "LawArtsHumanities";
    case Domain::MedicalLife: return "MedicalLife";
    case Domain::Natural: return "Natural";
    case Domain::Other: return "Other";
  }
  return "Other";
}

std::optional<Domain> domain_from_name(const std::string& name) {
  if (name == "SocialBehavioral") return Domain::SocialBehavioral;
  if (name == "LawArtsHumanities") return Domain::LawArtsHumanities;
  if (name == "MedicalLife") return Domain::MedicalLife;
  if (name == "Natural") return Domain::Natural;
  if (name == "Other") return Domain::Other;
  return std::nullopt;
}

}  // namespace scholarmatch
