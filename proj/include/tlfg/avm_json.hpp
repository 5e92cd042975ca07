// Machine-readable dump of feature structures: atoms, avms and sets are
// explicitly tagged so the format is lossless (unlike the parenthesized
// text, where a singleton set is indistinguishable from its element).
#pragma once

#include <string>

#include <json.hpp>

#include "tlfg/avm.hpp"

namespace tlfg::avm {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const FeatureStructure& fs) {
  switch (fs.kind()) {
    case FeatureStructure::Kind::Atom: {
      ojson j;
      j["atom"] = fs.atom_text();
      j["quoted"] = fs.atom_quoted();
      return j;
    }
    case FeatureStructure::Kind::Avm: {
      ojson feats = ojson::object();
      for (const auto& [name, value] : fs.features()) feats[name] = to_json(value);
      ojson j;
      j["avm"] = std::move(feats);
      return j;
    }
    case FeatureStructure::Kind::Set: {
      ojson elems = ojson::array();
      for (const auto& e : fs.elements()) elems.push_back(to_json(e));
      ojson j;
      j["set"] = std::move(elems);
      return j;
    }
  }
  return ojson();
}

inline FeatureStructure from_json(const ojson& j) {
  if (j.contains("atom"))
    return FeatureStructure::atom(j.at("atom").get<std::string>(),
                                  j.value("quoted", false));
  if (j.contains("avm")) {
    std::vector<Feature> feats;
    for (const auto& [name, value] : j.at("avm").items())
      feats.emplace_back(name, from_json(value));
    return FeatureStructure::make_avm(std::move(feats));
  }
  if (j.contains("set")) {
    std::vector<FeatureStructure> elems;
    for (const auto& e : j.at("set")) elems.push_back(from_json(e));
    return FeatureStructure::make_set(std::move(elems));
  }
  throw std::invalid_argument("not a feature-structure dump: " + j.dump());
}

}  // namespace tlfg::avm
