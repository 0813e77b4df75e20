#include <ostream>

#include <json.hpp>

#include "lsk/sweep.hpp"

namespace lsk {

namespace {

nlohmann::ordered_json family_json(const FamilyMatch& m) {
  return {{"family", family_name(m.family)}, {"sign", m.sign}, {"witness", m.witness}};
}

}  // namespace

void write_jsonl(std::ostream& os, const std::vector<VerificationRecord>& recs) {
  for (const auto& r : recs) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    if (r.p)
      j["p"] = *r.p;
    else
      j["p"] = nullptr;
    if (r.q)
      j["q"] = *r.q;
    else
      j["q"] = nullptr;
    j["gbar"] = r.gbar;
    j["gm"] = r.gm;
    auto fam = nlohmann::ordered_json::array();
    for (const auto& m : r.families) fam.push_back(family_json(m));
    j["families"] = fam;
    j["consistent"] = r.consistent;
    os << j.dump() << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<VerificationRecord>& recs) {
  os << "k,p,q,gbar,gm,families,consistent\n";
  for (const auto& r : recs) {
    os << r.k << ',';
    if (r.p) os << *r.p;
    os << ',';
    if (r.q) os << *r.q;
    os << ',' << r.gbar << ',' << (r.gm ? "true" : "false") << ',';
    for (size_t i = 0; i < r.families.size(); ++i) {
      if (i) os << ';';
      os << family_token(r.families[i]);
    }
    os << ',' << (r.consistent ? "true" : "false") << '\n';
  }
}

}  // namespace lsk
